#include "nlie/nlie_core.hpp"

#include <stdexcept>

namespace nlie {

WedgeElt n_bracket(const std::vector<WedgeElt>& args, int n) {
    if (static_cast<int>(args.size()) != n) throw std::invalid_argument("n_bracket: expected " + std::to_string(n) + " arguments");
    for (const auto& x : args)
        if (x.grade() != 1 || x.dim() != n + 1) throw std::invalid_argument("n_bracket: arguments must be vectors in C^{n+1}");
    return hodge_star(wedge_all(args));
}

WedgeElt ad_tilde(const WedgeElt& a, const WedgeElt& target) {
    const int dim = a.dim();
    if (a.grade() != dim - 2) throw std::invalid_argument("ad_tilde: first argument must have grade n-1");
    if (target.dim() != dim) throw std::invalid_argument("ad_tilde: dimension mismatch");
    WedgeElt out(dim, target.grade());
    if (target.grade() == 0) return out;
    std::vector<WedgeElt> image(dim + 1);
    for (int t = 1; t <= dim; ++t) image[t] = hodge_star(wedge(a, WedgeElt::basis(dim, {t})));
    for (const auto& [s, c] : target.terms()) {
        std::vector<int> idx = indices_of(s);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (image[idx[i]].is_zero()) continue;
            WedgeElt left = WedgeElt::basis(dim, std::vector<int>(idx.begin(), idx.begin() + i));
            WedgeElt right = WedgeElt::basis(dim, std::vector<int>(idx.begin() + i + 1, idx.end()));
            out += wedge(wedge(left, image[idx[i]]), right) * c;
        }
    }
    return out;
}

WedgeElt basic_bracket(const WedgeElt& a, const WedgeElt& b) {
    if (a.grade() != a.dim() - 2 || b.grade() != b.dim() - 2 || a.dim() != b.dim())
        throw std::invalid_argument("basic_bracket: both arguments must have grade n-1");
    return (ad_tilde(a, b) - ad_tilde(b, a)) * Scalar::frac(1, 2);
}

LieElt hodge_transport(const WedgeElt& a) {
    const int dim = a.dim();
    if (a.grade() != dim - 2) throw std::invalid_argument("hodge_transport: grade must be n-1");
    // column t of ad(a) is ad(a)(e_t); e^{st} has +1 in row s, column t
    LieElt out;
    for (int t = 1; t <= dim; ++t) {
        WedgeElt col = ad_tilde(a, WedgeElt::basis(dim, {t}));
        for (const auto& [s, c] : col.terms()) {
            int row = indices_of(s).front();
            if (row < t) out += e_elt(row, t, c);
        }
    }
    return out;
}

WedgeElt hodge_transport_inverse(const LieElt& x, int n) {
    auto fam = family_of(x);
    if (fam && *fam != Family::E) throw std::invalid_argument("hodge_transport_inverse: expected E family");
    // transport(a) = -*(a) read through e_i ^ e_j -> e^{ij}; ** = +1 between grades 2 and n-1
    WedgeElt two(n + 1, 2);
    for (const auto& [l, c] : x) two += WedgeElt::basis(n + 1, {l.p, l.q}, c);
    return -hodge_star(two);
}

WedgeElt random_wedge(int dim, int grade, std::mt19937_64& rng, double density) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::bernoulli_distribution keep(density);
    WedgeElt w(dim, grade);
    IndexSet full = (IndexSet(1) << dim) - 1;
    // enumerate subsets of size grade in increasing order (Gosper's hack)
    if (grade == 0) {
        w.add(0, Scalar(coef(rng)));
        return w;
    }
    for (IndexSet s = (IndexSet(1) << grade) - 1; s <= full && s != 0;) {
        if (keep(rng)) w.add(s, Scalar(coef(rng)));
        IndexSet c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return w;
}

namespace {

std::vector<WedgeElt> random_vectors(int dim, int count, std::mt19937_64& rng) {
    std::vector<WedgeElt> v;
    for (int k = 0; k < count; ++k) v.push_back(random_wedge(dim, 1, rng, 1.0));
    return v;
}

Json tuple_json(const std::vector<WedgeElt>& xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(x.str());
    return j;
}

// Both sides of the generalized Jacobi identity.
std::pair<WedgeElt, WedgeElt> jacobi_sides(const std::vector<WedgeElt>& x, int n) {
    std::vector<WedgeElt> outer(x.begin() + n, x.end());
    std::vector<WedgeElt> lhs_args{n_bracket(std::vector<WedgeElt>(x.begin(), x.begin() + n), n)};
    lhs_args.insert(lhs_args.end(), outer.begin(), outer.end());
    WedgeElt lhs = n_bracket(lhs_args, n);
    WedgeElt rhs(n + 1, 1);
    for (int i = 0; i < n; ++i) {
        std::vector<WedgeElt> inner{x[i]};
        inner.insert(inner.end(), outer.begin(), outer.end());
        std::vector<WedgeElt> args(x.begin(), x.begin() + n);
        args[i] = n_bracket(inner, n);
        rhs += n_bracket(args, n);
    }
    return {lhs, rhs};
}

}  // namespace

Report check_generalized_jacobi(int n, int trials, std::uint64_t seed) {
    Report rep{"jacobi", n};
    if (n < 3) throw std::invalid_argument("check_generalized_jacobi: n >= 3 required");
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        auto x = random_vectors(n + 1, 2 * n - 1, rng);
        auto [lhs, rhs] = jacobi_sides(x, n);
        if (lhs != rhs) {
            if (failures == 0) rep.details["counterexample"] = tuple_json(x);
            ++failures;
        }
    }
    rep.details["trials"] = trials;
    rep.details["seed"] = seed;
    rep.details["failures"] = failures;
    rep.require(failures == 0, "generalized Jacobi identity violated on " + std::to_string(failures) + " tuples");
    return rep;
}

Report check_generalized_jacobi_basis(int n) {
    Report rep{"jacobi-basis", n};
    const int dim = n + 1;
    int tuples = 0, failures = 0;
    // inner slot: n distinct sorted indices (omit one); outer slot: n-1 distinct sorted indices (omit two)
    for (int omit = 1; omit <= dim; ++omit)
        for (int o1 = 1; o1 <= dim; ++o1)
            for (int o2 = o1 + 1; o2 <= dim; ++o2) {
                std::vector<WedgeElt> x;
                for (int i = 1; i <= dim; ++i)
                    if (i != omit) x.push_back(WedgeElt::basis(dim, {i}));
                for (int i = 1; i <= dim; ++i)
                    if (i != o1 && i != o2) x.push_back(WedgeElt::basis(dim, {i}));
                auto [lhs, rhs] = jacobi_sides(x, n);
                ++tuples;
                if (lhs != rhs) {
                    if (failures == 0) rep.details["counterexample"] = tuple_json(x);
                    ++failures;
                }
            }
    rep.details["tuples"] = tuples;
    rep.details["failures"] = failures;
    rep.require(failures == 0, "generalized Jacobi identity violated on basis tuples");
    return rep;
}

Report check_ad_homomorphism(int n, int trials, std::uint64_t seed) {
    Report rep{"basic-lie", n};
    if (n < 3) throw std::invalid_argument("check_ad_homomorphism: n >= 3 required");
    const int dim = n + 1;
    SoAlgebra alg(n);
    std::mt19937_64 rng(seed);
    int jacobi_fail = 0, prop_fail = 0, antisym_fail = 0;
    for (int t = 0; t < trials; ++t) {
        WedgeElt a = random_wedge(dim, n - 1, rng), b = random_wedge(dim, n - 1, rng), c = random_wedge(dim, n - 1, rng);
        WedgeElt jac = basic_bracket(basic_bracket(a, b), c) + basic_bracket(basic_bracket(b, c), a) +
                       basic_bracket(basic_bracket(c, a), b);
        if (!jac.is_zero()) ++jacobi_fail;
        if (basic_bracket(a, b) != -basic_bracket(b, a)) ++antisym_fail;
        WedgeElt ab = basic_bracket(a, b);
        for (int g : {1, 2}) {
            WedgeElt u = random_wedge(dim, g, rng);
            WedgeElt lhs = ad_tilde(ab, u);
            WedgeElt rhs = ad_tilde(a, ad_tilde(b, u)) - ad_tilde(b, ad_tilde(a, u));
            if (lhs != rhs) ++prop_fail;
        }
    }
    // basis pairs: transport of the basic bracket equals the so(n+1) commutator
    std::vector<WedgeElt> basis;
    IndexSet full = (IndexSet(1) << dim) - 1;
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            basis.push_back(WedgeElt::basis(dim, indices_of(full & ~index_set({i, j}))));
    int pair_fail = 0, matrix_fail = 0, pairs = 0;
    for (const auto& x : basis) {
        LieElt tx = hodge_transport(x);
        ExactMatrix ad(dim, dim);
        for (int col = 1; col <= dim; ++col) {
            WedgeElt img = ad_tilde(x, WedgeElt::basis(dim, {col}));
            for (int row = 1; row <= dim; ++row) ad(row - 1, col - 1) = img.coeff(index_set({row}));
        }
        if (alg.matrix_of(tx) != ad) ++matrix_fail;
        for (const auto& y : basis) {
            ++pairs;
            if (hodge_transport(basic_bracket(x, y)) != alg.commutator(tx, hodge_transport(y))) ++pair_fail;
        }
    }
    rep.details["trials"] = trials;
    rep.details["seed"] = seed;
    rep.details["jacobi_failures"] = jacobi_fail;
    rep.details["antisymmetry_failures"] = antisym_fail;
    rep.details["homomorphism_failures"] = prop_fail;
    rep.details["transport_pairs"] = pairs;
    rep.details["transport_failures"] = pair_fail;
    rep.details["transport_matrix_failures"] = matrix_fail;
    rep.require(jacobi_fail == 0, "Jacobi identity fails for the basic bracket");
    rep.require(antisym_fail == 0, "basic bracket is not antisymmetric");
    rep.require(prop_fail == 0, "ad~([a,b]) != [ad~(a), ad~(b)]");
    rep.require(pair_fail == 0, "transported basic bracket differs from the so(n+1) commutator");
    rep.require(matrix_fail == 0, "transport matrix differs from ad");
    return rep;
}

}  // namespace nlie
