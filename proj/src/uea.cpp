#include "nlie/uea.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace nlie {

UElt u_one() { return UElt(Monomial{}); }

UElt u_mono(const Monomial& m, const Scalar& c) { return UElt(m, c); }

UElt u_of(const LieElt& x) {
    UElt u;
    for (const auto& [l, c] : x) u.add(Monomial{l}, c);
    return u;
}

int degree(const UElt& u) {
    int d = -1;
    for (const auto& [m, c] : u) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

namespace {

void append_term(std::string& out, const Scalar& c, const std::string& mono) {
    std::string cs = c.str();
    bool neg = c.is_rational() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string term;
    if (cs == "1")
        term = mono;
    else
        term = (c.is_rational() ? cs : "(" + cs + ")") + (mono == "1" ? "" : "*" + mono);
    if (out.empty())
        out = (neg ? "-" : "") + term;
    else
        out += (neg ? " - " : " + ") + term;
}

// Sorts a two-factor product of commuting labels.
Monomial sorted_pair(const LieLabel& a, const LieLabel& b) { return a < b ? Monomial{a, b} : Monomial{b, a}; }

UElt commuting_product(const LieElt& x, const LieElt& y) {
    UElt u;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) u.add(sorted_pair(a, b), ca * cb);
    return u;
}

}  // namespace

std::string to_string(const UElt& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : u) {
        std::string mono;
        for (const auto& l : m) mono += (mono.empty() ? "" : "*") + l.str();
        if (mono.empty()) mono = "1";
        append_term(out, c, mono);
    }
    return out;
}

std::string to_string(const SymElt& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : s) append_term(out, c, k.first.str() + "(.)" + k.second.str());
    return out;
}

UElt normal_order(const UElt& raw, const LabelLess& less, const SoAlgebra& alg, const DescentPicker& pick) {
    UElt result, pending = raw;
    std::vector<std::size_t> descents;
    while (!pending.is_zero()) {
        auto it = std::prev(pending.terms().end());
        Monomial m = it->first;
        Scalar c = it->second;
        pending.set(m, Scalar(0));
        descents.clear();
        for (std::size_t i = 0; i + 1 < m.size(); ++i)
            if (less(m[i + 1], m[i])) descents.push_back(i);
        if (descents.empty()) {
            result.add(m, c);
            continue;
        }
        std::size_t i = pick ? pick(m, descents) : descents.front();
        const LieElt& br = alg.bracket(m[i], m[i + 1]);
        Monomial swapped = m;
        std::swap(swapped[i], swapped[i + 1]);
        pending.add(swapped, c);
        for (const auto& [l, bc] : br) {
            Monomial r(m.begin(), m.begin() + i);
            r.push_back(l);
            r.insert(r.end(), m.begin() + i + 2, m.end());
            pending.add(r, c * bc);
        }
    }
    return result;
}

LabelLess pbw_order(const SoAlgebra& alg, Family f) {
    if (f == Family::E) return [](const LieLabel& a, const LieLabel& b) { return a < b; };
    const SoAlgebra* p = &alg;
    return [p](const LieLabel& a, const LieLabel& b) {
        int ka = static_cast<int>(p->kind(a)), kb = static_cast<int>(p->kind(b));
        if (ka != kb) return ka < kb;
        return a < b;
    };
}

UElt pbw_normalize(const SoAlgebra& alg, const UElt& raw, const DescentPicker& pick) {
    std::optional<Family> fam;
    for (const auto& [m, c] : raw)
        for (const auto& l : m) {
            if (fam && *fam != l.fam) throw std::invalid_argument("pbw_normalize: mixed label families");
            fam = l.fam;
        }
    if (!fam) return raw;
    return normal_order(raw, pbw_order(alg, *fam), alg, pick);
}

UElt u_multiply(const SoAlgebra& alg, const UElt& x, const UElt& y) {
    UElt raw;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            Monomial m = mx;
            m.insert(m.end(), my.begin(), my.end());
            raw.add(m, cx * cy);
        }
    return pbw_normalize(alg, raw);
}

DescentPicker random_picker(std::mt19937_64& rng) {
    std::mt19937_64* r = &rng;
    return [r](const Monomial&, const std::vector<std::size_t>& d) {
        std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
        return d[pick(*r)];
    };
}

UElt qa_generator(int i, int k, int l, int m) {
    std::vector<int> idx{i, k, l, m};
    std::vector<int> s = idx;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("qa_generator: indices must be distinct");
    UElt u = commuting_product(e_elt(i, k), e_elt(l, m));
    u -= commuting_product(e_elt(i, l), e_elt(k, m));
    u += commuting_product(e_elt(i, m), e_elt(k, l));
    return u;
}

std::vector<UElt> qa_generators(int n) {
    std::vector<UElt> out;
    const int m = n + 1;
    for (int i = 1; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k)
            for (int l = k + 1; l <= m; ++l)
                for (int q = l + 1; q <= m; ++q) out.push_back(qa_generator(i, k, l, q));
    return out;
}

UElt qa_generator_symmetrized(int i, int k, int l, int m) {
    std::vector<int> a{i, k, l, m};
    std::vector<int> perm{0, 1, 2, 3};
    UElt u;
    do {
        int inversions = 0;
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y) inversions += perm[x] > perm[y];
        Scalar sign(inversions % 2 ? -1 : 1);
        u += commuting_product(e_elt(a[perm[0]], a[perm[1]], sign), e_elt(a[perm[2]], a[perm[3]]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    u *= Scalar::frac(1, 8);
    return u;
}

SymKey sym_key(const LieLabel& x, const LieLabel& y) { return x < y ? SymKey{x, y} : SymKey{y, x}; }

SymElt sym(const LieElt& x, const LieElt& y) {
    SymElt s;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) s.add(sym_key(a, b), ca * cb);
    return s;
}

SymElt qa_generator_sym(int i, int k, int l, int m) {
    return sym(e_elt(i, k), e_elt(l, m)) - sym(e_elt(i, l), e_elt(k, m)) + sym(e_elt(i, m), e_elt(k, l));
}

std::vector<SymElt> qa_generators_sym(int n) {
    std::vector<SymElt> out;
    const int m = n + 1;
    for (int i = 1; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k)
            for (int l = k + 1; l <= m; ++l)
                for (int q = l + 1; q <= m; ++q) out.push_back(qa_generator_sym(i, k, l, q));
    return out;
}

UElt lift(const SoAlgebra& alg, const SymElt& s) {
    UElt raw;
    Scalar half = Scalar::frac(1, 2);
    for (const auto& [k, c] : s) {
        raw.add(Monomial{k.first, k.second}, c * half);
        raw.add(Monomial{k.second, k.first}, c * half);
    }
    return pbw_normalize(alg, raw);
}

SymElt symbol2(const UElt& u) {
    SymElt s;
    for (const auto& [m, c] : u)
        if (m.size() == 2) s.add(sym_key(m[0], m[1]), c);
    return s;
}

SymElt ad_sym(const SoAlgebra& alg, const LieElt& g, const SymElt& s) {
    SymElt out;
    for (const auto& [k, c] : s) {
        LieElt a(k.first), b(k.second);
        out.add_scaled(sym(alg.commutator(g, a), b), c);
        out.add_scaled(sym(a, alg.commutator(g, b)), c);
    }
    return out;
}

SymElt sym_to_v(const SoAlgebra& alg, const SymElt& s) {
    SymElt out;
    for (const auto& [k, c] : s) out.add_scaled(sym(alg.to_v_basis(k.first), alg.to_v_basis(k.second)), c);
    return out;
}

SymElt sym_from_v(const SoAlgebra& alg, const SymElt& s) {
    SymElt out;
    for (const auto& [k, c] : s) out.add_scaled(sym(alg.from_v_basis(k.first), alg.from_v_basis(k.second)), c);
    return out;
}

SymElt psi_map(const WedgeElt& w) {
    if (w.grade() != 4) throw std::invalid_argument("psi_map: grade 4 expected");
    SymElt out;
    for (const auto& [s, c] : w.terms()) {
        auto x = indices_of(s);
        int i = x[0], j = x[1], k = x[2], l = x[3];
        out.add_scaled(sym(e_elt(i, j), e_elt(k, l)) - sym(e_elt(i, k), e_elt(j, l)) + sym(e_elt(i, l), e_elt(j, k)), c);
    }
    return out;
}

WedgeElt phi_map(const SymElt& s, int n) {
    WedgeElt out(n + 1, 4);
    for (const auto& [k, c] : s) {
        if (k.first.fam != Family::E || k.second.fam != Family::E)
            throw std::invalid_argument("phi_map: E-family input expected");
        out += WedgeElt::basis(n + 1, {k.first.p, k.first.q, k.second.p, k.second.q}, c);
    }
    return out;
}

WedgeElt act_on_wedge(const SoAlgebra& alg, const LieElt& g, const WedgeElt& w) {
    const int dim = w.dim();
    if (dim != alg.m()) throw std::invalid_argument("act_on_wedge: dimension mismatch");
    ExactMatrix mat = alg.matrix_of(g);
    std::vector<WedgeElt> image(dim + 1);
    for (int t = 1; t <= dim; ++t) {
        image[t] = WedgeElt(dim, 1);
        for (int r = 1; r <= dim; ++r)
            if (!mat(r - 1, t - 1).is_zero()) image[t].add(IndexSet(1) << (r - 1), mat(r - 1, t - 1));
    }
    WedgeElt out(dim, w.grade());
    for (const auto& [s, c] : w.terms()) {
        auto idx = indices_of(s);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            WedgeElt left = WedgeElt::basis(dim, std::vector<int>(idx.begin(), idx.begin() + i));
            WedgeElt right = WedgeElt::basis(dim, std::vector<int>(idx.begin() + i + 1, idx.end()));
            out += wedge(wedge(left, image[idx[i]]), right) * c;
        }
    }
    return out;
}

SymIndexer::SymIndexer(const SoAlgebra& alg, Family f) : alg_(&alg) {
    const auto& labels = alg.labels(f);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j) keys_.push_back({labels[i], labels[j]});
}

std::size_t SymIndexer::index(const SymKey& k) const {
    const std::size_t D = alg_->labels(k.first.fam).size();
    std::size_t i = alg_->index(k.first), j = alg_->index(k.second);
    if (i > j) std::swap(i, j);
    // rows 0..i-1 hold D, D-1, ..., D-i+1 entries
    return i * D - i * (i - 1) / 2 + (j - i);
}

SparseVec<Scalar> SymIndexer::coords(const SymElt& s) const {
    std::map<std::size_t, Scalar> m;
    for (const auto& [k, c] : s) m[index(k)] += c;
    return to_sparse(m);
}

SymElt SymIndexer::element(const SparseVec<Scalar>& v) const {
    SymElt s;
    for (const auto& [i, c] : v) s.add(keys_.at(i), c);
    return s;
}

std::size_t MonomialIndexer::index(const Monomial& m) {
    auto [it, inserted] = index_.try_emplace(m, index_.size());
    return it->second;
}

SparseVec<Scalar> MonomialIndexer::coords(const UElt& u) {
    std::map<std::size_t, Scalar> m;
    for (const auto& [mono, c] : u) m[index(mono)] += c;
    return to_sparse(m);
}

long binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

long sym2_dimension(int n) { return 3 * binomial(n + 1, 4) + 3 * binomial(n + 1, 3) + binomial(n + 1, 2); }

std::vector<SymElt> ker_phi_basis(const SoAlgebra& alg) {
    SymIndexer idx(alg, Family::E);
    // rows indexed by 4-subsets, columns by the symmetric basis
    std::map<IndexSet, std::map<std::size_t, Scalar>> rows;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        WedgeElt img = phi_map(SymElt(idx.key(k)), alg.n());
        for (const auto& [s, c] : img.terms()) rows[s][k] += c;
    }
    RowEchelon<Scalar> ech;
    for (const auto& [s, r] : rows) ech.insert(to_sparse(r));
    std::vector<SymElt> out;
    for (const auto& v : ech.kernel_basis(idx.size())) out.push_back(idx.element(v));
    return out;
}

Report check_R_structure(int n) {
    Report rep{"relations", n};
    SoAlgebra alg(n);
    SymIndexer idx(alg, Family::E);
    const auto gens = qa_generators_sym(n);
    std::vector<SparseVec<Scalar>> R;
    for (const auto& g : gens) R.push_back(idx.coords(g));
    RowEchelon<Scalar> rspan;
    for (const auto& r : R) rspan.insert(r);

    // (a) closure under the adjoint action
    int closure_fail = 0;
    for (const auto& l : alg.labels(Family::E))
        for (const auto& g : gens)
            if (!rspan.contains(idx.coords(ad_sym(alg, LieElt(l), g)))) ++closure_fail;

    // (b) dimension
    const long expect_R = binomial(n + 1, 4);

    // (c) R = psi(fourth exterior power)
    std::vector<SparseVec<Scalar>> P;
    const int m = n + 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l) P.push_back(idx.coords(psi_map(WedgeElt::basis(m, {i, j, k, l}))));
    const std::size_t rank_P = rank_of(P);
    const std::size_t meet_RP = intersection_dim(R, P);

    // (d) complement Ker phi
    std::vector<SparseVec<Scalar>> K;
    for (const auto& k : ker_phi_basis(alg)) K.push_back(idx.coords(k));
    const std::size_t meet_RK = intersection_dim(R, K);

    // (e) truncated two-sidedness in PBW coordinates, degree <= 3
    const auto ugens = qa_generators(n);
    MonomialIndexer mi;
    RowEchelon<Scalar> left_ideal;
    for (const auto& r : ugens) left_ideal.insert(mi.coords(r));
    for (const auto& l : alg.labels(Family::E))
        for (const auto& r : ugens) left_ideal.insert(mi.coords(u_multiply(alg, u_of(LieElt(l)), r)));
    int two_sided_fail = 0;
    for (const auto& l : alg.labels(Family::E))
        for (const auto& r : ugens) {
            UElt u = u_of(LieElt(l));
            if (!left_ideal.contains(mi.coords(u_multiply(alg, r, u)))) ++two_sided_fail;
        }

    rep.details["dim_S2"] = idx.size();
    rep.details["dim_S2_formula"] = sym2_dimension(n);
    rep.details["dim_R"] = rspan.rank();
    rep.details["expected_dim_R"] = expect_R;
    rep.details["adjoint_closure_failures"] = closure_fail;
    rep.details["rank_psi"] = rank_P;
    rep.details["dim_R_meet_psi"] = meet_RP;
    rep.details["dim_ker_phi"] = K.size();
    rep.details["dim_R_meet_ker_phi"] = meet_RK;
    rep.details["two_sided_truncation_degree"] = 3;
    rep.details["two_sided_failures"] = two_sided_fail;
    rep.details["left_ideal_rank_deg3"] = left_ideal.rank();

    rep.require(static_cast<long>(idx.size()) == sym2_dimension(n), "dim S^2 differs from the closed formula");
    rep.require(closure_fail == 0, "[so(n+1), R] is not contained in R");
    rep.require(static_cast<long>(rspan.rank()) == expect_R, "dim R != C(n+1,4)");
    rep.require(rank_P == rspan.rank() && meet_RP == rspan.rank(), "R != psi(fourth exterior power)");
    rep.require(meet_RK == 0, "R meets Ker phi");
    rep.require(rspan.rank() + K.size() == idx.size(), "dim R + dim Ker phi != dim S^2");
    rep.require(two_sided_fail == 0, "r.u not in span(R) + U_1 R at degree <= 3");
    return rep;
}

Report check_psi_equivariance(int n, int trials, std::uint64_t seed) {
    Report rep{"psi-equivariance", n};
    SoAlgebra alg(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::bernoulli_distribution keep(0.3);
    int fail = 0;
    for (int t = 0; t < trials; ++t) {
        LieElt g;
        for (const auto& l : alg.labels(Family::E))
            if (keep(rng)) g.add(l, Scalar(coef(rng)));
        WedgeElt w(alg.m(), 4);
        const int m = alg.m();
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = j + 1; k <= m; ++k)
                    for (int l = k + 1; l <= m; ++l)
                        if (keep(rng)) w.add(index_set({i, j, k, l}), Scalar(coef(rng)));
        if (psi_map(act_on_wedge(alg, g, w)) != ad_sym(alg, g, psi_map(w))) ++fail;
    }
    rep.details["trials"] = trials;
    rep.details["seed"] = seed;
    rep.details["failures"] = fail;
    rep.require(fail == 0, "psi is not equivariant");
    return rep;
}

Report check_phi_psi(int n) {
    Report rep{"phi-psi", n};
    const int m = n + 1;
    int checked = 0, fail = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l) {
                    WedgeElt w = WedgeElt::basis(m, {i, j, k, l});
                    ++checked;
                    if (phi_map(psi_map(w), n) != w * Scalar(3)) ++fail;
                }
    rep.details["monomials"] = checked;
    rep.details["failures"] = fail;
    rep.require(fail == 0, "phi(psi(w)) != 3w");
    return rep;
}

}  // namespace nlie
