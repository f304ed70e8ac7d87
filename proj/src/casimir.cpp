#include "nlie/casimir.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace nlie {

namespace {

LieElt E(int a, int b) { return e_elt(a, b); }

Weight add_weights(const Weight& x, const Weight& y) {
    Weight w(x.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = x[k] + y[k];
    return w;
}

Json weight_json(const Weight& w) {
    Json j = Json::array();
    for (const auto& c : w) j.push_back(rational_str(c));
    return j;
}

}  // namespace

CasimirOp::CasimirOp(int n) : alg_(n), idx_(alg_, Family::E) {}

SymElt CasimirOp::apply(const SymElt& s) const {
    const int m = alg_.m();
    const Scalar mhalf = Scalar::frac(-1, 2);
    SymElt out;
    for (const auto& [key, co] : s) {
        if (key.first.fam != Family::E || key.second.fam != Family::E)
            throw std::invalid_argument("CasimirOp: E-family input expected");
        const int a = key.first.p, b = key.first.q, c = key.second.p, d = key.second.q;
        SymElt img;
        if (a == c && b == d) {
            for (int i = 1; i <= m; ++i) img.add_scaled(sym(E(a, i), E(a, i)) + sym(E(b, i), E(b, i)), mhalf);
            img += sym(E(a, b), E(a, b));
        } else if (a == c) {
            for (int i = 1; i <= m; ++i) img.add_scaled(sym(E(i, b), E(i, d)), mhalf);
            img += sym(E(a, b), E(a, d));
        } else if (b == d) {
            for (int i = 1; i <= m; ++i) img.add_scaled(sym(E(a, i), E(c, i)), mhalf);
            img += sym(E(a, b), E(c, b));
        } else if (b == c) {
            for (int i = 1; i <= m; ++i) img.add_scaled(sym(E(a, i), E(i, d)), mhalf);
            img += sym(E(a, b), E(b, d));
        } else if (a == d) {
            for (int i = 1; i <= m; ++i) img.add_scaled(sym(E(i, b), E(c, i)), mhalf);
            img += sym(E(a, b), E(c, a));
        } else {
            img -= sym(E(a, d), E(b, c));
            img += sym(E(b, d), E(a, c));
        }
        out.add_scaled(img, co);
    }
    return out;
}

SymElt CasimirOp::casimir(const SymElt& s) const {
    SymElt acc;
    for (const auto& l : alg_.labels(Family::E)) {
        LieElt g(l);
        acc += ad_sym(alg_, g, ad_sym(alg_, g, s));
    }
    acc *= Scalar::frac(-1, 2 * alg_.n());
    return acc;
}

SymElt CasimirOp::apply_definition(const SymElt& s) const {
    const int n = alg_.n();
    return casimir(s) * Scalar::frac(n, 2) - s * Scalar(n);
}

std::vector<SparseVec<Scalar>> CasimirOp::shifted_columns(const Scalar& theta) const {
    std::vector<SparseVec<Scalar>> cols;
    cols.reserve(idx_.size());
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        SymElt basis(idx_.key(k));
        cols.push_back(idx_.coords(apply(basis) - basis * theta));
    }
    return cols;
}

std::vector<SymElt> CasimirOp::eigenspace(const Scalar& theta) const {
    // ker(M) = {x : row . x = 0}; rows of M are the transposed columns
    auto rows = transpose(shifted_columns(theta), idx_.size());
    RowEchelon<Scalar> ech;
    for (const auto& r : rows) ech.insert(r);
    std::vector<SymElt> out;
    for (const auto& v : ech.kernel_basis(idx_.size())) out.push_back(idx_.element(v));
    return out;
}

std::size_t CasimirOp::eigenspace_dim(const Scalar& theta) const {
    return idx_.size() - rank_of(shifted_columns(theta));
}

std::vector<EigenVector> eigenbasis(int n) {
    CasimirOp op(n);
    const int m = n + 1;
    std::vector<EigenVector> out;
    auto push = [&](const char* fam, SymElt v, Scalar theta) {
        bool holds = op.apply(v) == v * theta;
        out.push_back({fam, std::move(v), theta, holds});
    };
    const Scalar one(1), minus_two(-2), c_val = Scalar::frac(-(n - 1), 2), d_val(-n);

    // B: one 3-dimensional block per 4-subset
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int d = c + 1; d <= m; ++d) {
                    push("B", sym(E(a, b), E(c, d)) + sym(E(a, d), E(b, c)) - sym(E(a, c), E(b, d)), minus_two);
                    push("B", sym(E(a, b), E(c, d)) + sym(E(a, c), E(b, d)), one);
                    push("B", sym(E(a, d), E(b, c)) + sym(E(a, c), E(b, d)), one);
                }

    // C: V_ac spanned by v_k = e^{ak} (.) e^{ck}
    for (int a = 1; a <= m; ++a)
        for (int c = a + 1; c <= m; ++c) {
            std::vector<SymElt> v;
            SymElt total;
            for (int k = 1; k <= m; ++k)
                if (k != a && k != c) {
                    v.push_back(sym(E(a, k), E(c, k)));
                    total += v.back();
                }
            for (std::size_t k = 0; k + 1 < v.size(); ++k) push("C", v[k] - v[k + 1], one);
            push("C", total, c_val);
        }

    // D
    auto X = [](int a, int b) { return sym(E(a, b), E(a, b)); };
    auto S = [&](int a) {
        SymElt s;
        for (int i = 1; i <= m; ++i) s += sym(E(a, i), E(a, i));
        return s;
    };
    for (int a = 1; a <= m; ++a)
        for (int b = a + 2; b + 1 <= m; ++b) push("D", X(a, b) - X(a + 1, b) - X(a, b + 1) + X(a + 1, b + 1), one);
    for (int a = 1; a <= n; ++a) push("D", S(a) - S(a + 1), c_val);
    SymElt total;
    for (int a = 1; a <= m; ++a) total += S(a);
    push("D", total, d_val);
    for (int p = 2; p <= n - 1; ++p) push("D", X(p - 1, p) - X(p - 1, p + 1) - X(p, p + 2) + X(p + 1, p + 2), one);
    return out;
}

std::size_t s2_highest_weight_dim(const SoAlgebra& alg, const Weight& mu) {
    SymIndexer vidx(alg, Family::V);
    std::vector<SymElt> basis;
    for (const auto& k : vidx.keys())
        if (add_weights(alg.weight_of(k.first), alg.weight_of(k.second)) == mu) basis.push_back(SymElt(k));
    const auto& raising = alg.root_system().raising;
    std::vector<SparseVec<Scalar>> images;
    for (const auto& b : basis) {
        SparseVec<Scalar> row;
        for (std::size_t r = 0; r < raising.size(); ++r)
            for (const auto& [i, c] : vidx.coords(ad_sym(alg, LieElt(raising[r]), b))) row.emplace_back(r * vidx.size() + i, c);
        images.push_back(std::move(row));
    }
    return basis.size() - rank_of(images);
}

std::vector<HighestWeightCount> r_highest_weights(const SoAlgebra& alg) {
    SymIndexer vidx(alg, Family::V);
    // R is stable under the Cartan, so weight components of its elements stay in R
    std::map<Weight, RowEchelon<Scalar>> by_weight;
    for (const auto& g : qa_generators_sym(alg.n())) {
        std::map<Weight, SymElt> parts;
        for (const auto& [k, c] : sym_to_v(alg, g))
            parts[add_weights(alg.weight_of(k.first), alg.weight_of(k.second))].add(k, c);
        for (const auto& [w, part] : parts) by_weight[w].insert(vidx.coords(part));
    }
    const auto& raising = alg.root_system().raising;
    std::vector<HighestWeightCount> out;
    for (const auto& [w, ech] : by_weight) {
        std::vector<SparseVec<Scalar>> images;
        for (const auto& row : ech.rows()) {
            SymElt b = vidx.element(row);
            SparseVec<Scalar> img;
            for (std::size_t r = 0; r < raising.size(); ++r)
                for (const auto& [i, c] : vidx.coords(ad_sym(alg, LieElt(raising[r]), b))) img.emplace_back(r * vidx.size() + i, c);
            images.push_back(std::move(img));
        }
        std::size_t hw = ech.rank() - rank_of(images);
        if (hw == 0) continue;
        out.push_back({w, hw, s2_highest_weight_dim(alg, w)});
    }
    return out;
}

Report check_casimir_table(int n) {
    Report rep{"casimir-table", n};
    CasimirOp op(n);
    const auto& idx = op.indexer();
    // the table agrees with (n/2)c - (n-1)Id, one unit above the stated shift
    int fail_shifted = 0, fail_literal = 0;
    for (const auto& key : idx.keys()) {
        SymElt b(key);
        SymElt table = op.apply(b), def = op.apply_definition(b);
        if (table != def + b) ++fail_shifted;
        if (table != def) ++fail_literal;
    }
    rep.details["basis_elements"] = idx.size();
    rep.details["table_vs_stated_shift_mismatches"] = fail_literal;
    rep.details["table_vs_shift_n_minus_1_mismatches"] = fail_shifted;
    rep.require(fail_shifted == 0, "table differs from (n/2)c - (n-1)Id");
    return rep;
}

Report check_eigenbasis(int n) {
    Report rep{"casimir-eigenbasis", n};
    CasimirOp op(n);
    auto vecs = eigenbasis(n);
    std::vector<SparseVec<Scalar>> coords;
    std::map<std::string, int> bad;
    std::set<Scalar> claimed;
    Json failures = Json::array();
    for (const auto& v : vecs) {
        coords.push_back(op.indexer().coords(v.vec));
        claimed.insert(v.claimed);
        if (!v.holds) {
            ++bad[v.family + " at " + v.claimed.str()];
            if (failures.size() < 4)
                failures.push_back({{"family", v.family}, {"claimed", v.claimed.str()}, {"vector", to_string(v.vec)},
                                    {"image", to_string(op.apply(v.vec))}});
        }
    }
    const std::size_t rank = rank_of(coords);
    Json claims = Json::object();
    for (const auto& [k, c] : bad) claims[k] = c;
    rep.details["vectors"] = vecs.size();
    rep.details["dim_S2"] = op.indexer().size();
    rep.details["rank"] = rank;
    rep.details["failed_claims"] = claims;
    if (!failures.empty()) rep.details["examples"] = failures;
    rep.require(vecs.size() == op.indexer().size() && rank == vecs.size(), "displayed vectors do not form a basis of S^2");
    rep.require(bad.empty(), "some displayed vectors are not eigenvectors with the stated eigenvalue");
    return rep;
}

Report identify_R(int n) {
    Report rep{"casimir", n};
    CasimirOp op(n);
    const SoAlgebra& alg = op.algebra();
    const auto& idx = op.indexer();
    std::vector<SparseVec<Scalar>> R;
    int not_eigen = 0;
    for (const auto& g : qa_generators_sym(n)) {
        R.push_back(idx.coords(g));
        if (op.apply(g) != g * Scalar(-2)) ++not_eigen;
    }
    const std::size_t dim_R = rank_of(R);
    const auto eig = op.eigenspace(Scalar(-2));
    std::vector<SparseVec<Scalar>> E2;
    for (const auto& v : eig) E2.push_back(idx.coords(v));
    const std::size_t meet = intersection_dim(R, E2);
    const bool equal = not_eigen == 0 && meet == dim_R && dim_R == E2.size();

    // full spectrum of the table: eigenvalues of the four isotypic pieces
    Json spectrum = Json::object();
    std::size_t total = 0;
    std::set<Scalar> thetas{Scalar(-2), Scalar(1), Scalar::frac(-(n - 3), 2), Scalar(-(n - 1)), Scalar::frac(-(n - 1), 2),
                            Scalar(-n)};
    for (const auto& t : thetas) {
        std::size_t d = op.eigenspace_dim(t);
        spectrum[t.str()] = d;
        total += d;
    }

    auto hws = r_highest_weights(alg);
    bool mult_one = true;
    Json hw = Json::array();
    for (const auto& h : hws) {
        hw.push_back({{"weight", weight_json(h.weight)}, {"in_R", h.in_R}, {"in_S2", h.in_S2}});
        mult_one = mult_one && h.in_R == h.in_S2;
    }

    rep.details["dim_R"] = dim_R;
    rep.details["dim_eigenspace_minus2"] = E2.size();
    rep.details["R_in_eigenspace"] = not_eigen == 0;
    rep.details["R_equals_eigenspace"] = equal;
    rep.details["spectrum"] = spectrum;
    rep.details["spectrum_total"] = total;
    rep.details["dim_S2"] = idx.size();
    rep.details["highest_weights_of_R"] = hw;
    rep.details["multiplicity_one"] = mult_one;
    rep.require(not_eigen == 0, "R is not inside Eig(-2)");
    rep.require(total == idx.size(), "eigenspaces do not exhaust S^2");
    rep.require(equal || mult_one, "R is neither Eig(-2) nor a multiplicity-free sum of isotypic components");
    return rep;
}

}  // namespace nlie
