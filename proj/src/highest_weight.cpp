#include "nlie/highest_weight.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>
#include <stdexcept>

namespace nlie {

namespace {

// Signed indices ordered by |p|, then + before -; v_0 comes first.
std::vector<int> signed_indices(const SoAlgebra& alg) {
    std::vector<int> out;
    if (alg.odd()) out.push_back(0);
    for (int j = 1; j <= alg.N(); ++j) {
        out.push_back(j);
        out.push_back(-j);
    }
    return out;
}

// Expands every E-family factor in the V basis.
UElt u_to_v(const SoAlgebra& alg, const UElt& u) {
    UElt out;
    for (const auto& [m, c] : u) {
        UElt prod(Monomial{}, c);
        for (const auto& l : m) {
            const LieElt& img = l.fam == Family::E ? alg.to_v_basis(l) : LieElt(l);
            UElt next;
            for (const auto& [pm, pc] : prod)
                for (const auto& [vl, vc] : img) {
                    Monomial q = pm;
                    q.push_back(vl);
                    next.add(q, pc * vc);
                }
            prod = std::move(next);
        }
        out += prod;
    }
    return out;
}

WeightPoly x_var() { return WeightPoly::variable(1, 0); }
WeightPoly x_const(const Scalar& c) { return WeightPoly::constant(1, c); }

std::string poly_x(const WeightPoly& p) { return p.str(std::vector<std::string>{"x"}); }

Json polys_json(const std::vector<WeightPoly>& ps) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(p.str());
    return j;
}

}  // namespace

std::string VGenerator::str() const {
    std::string idx, sg;
    for (int k = 0; k < 4; ++k) {
        idx += (k ? "," : "") + std::to_string(index[k]);
        sg += (k ? "," : "") + std::string(sign[k] > 0 ? "+" : "-");
    }
    return "v_{" + idx + "}(" + sg + ")";
}

Weight weight_of(const VGenerator& g, int N) {
    Weight w(N, Rational(0));
    for (int k = 0; k < 4; ++k)
        if (g.index[k] > 0) w[g.index[k] - 1] += g.sign[k];
    return w;
}

SymElt v_generator_sym(int i, int j, int k, int l) {
    return sym(v_elt(i, j), v_elt(k, l)) - sym(v_elt(i, k), v_elt(j, l)) + sym(v_elt(i, l), v_elt(j, k));
}

std::vector<VGenerator> v_generators(int n) {
    SoAlgebra alg(n);
    auto s = signed_indices(alg);
    std::vector<VGenerator> out;
    const std::size_t K = s.size();
    for (std::size_t a = 0; a < K; ++a)
        for (std::size_t b = a + 1; b < K; ++b)
            for (std::size_t c = b + 1; c < K; ++c)
                for (std::size_t d = c + 1; d < K; ++d) {
                    VGenerator g;
                    std::array<int, 4> p{s[a], s[b], s[c], s[d]};
                    for (int k = 0; k < 4; ++k) {
                        g.index[k] = std::abs(p[k]);
                        g.sign[k] = p[k] < 0 ? -1 : 1;
                    }
                    g.elt = lift(alg, v_generator_sym(p[0], p[1], p[2], p[3]));
                    out.push_back(std::move(g));
                }
    return out;
}

std::vector<VGenerator> weight_zero_generators(int n) {
    const int N = (n + 1) / 2;
    Weight zero(N, Rational(0));
    std::vector<VGenerator> out;
    for (auto& g : v_generators(n))
        if (weight_of(g, N) == zero) out.push_back(std::move(g));
    return out;
}

WeightPoly lambda_var(int N, int j) { return WeightPoly::variable(N, j - 1); }

WeightPoly hw_action(const SoAlgebra& alg, const UElt& u) {
    const int N = alg.N();
    UElt v = u_to_v(alg, u);
    UElt nf = pbw_normalize(alg, v);
    WeightPoly out(N);
    for (const auto& [m, c] : nf) {
        WeightPoly term = WeightPoly::constant(N, c);
        bool survives = true;
        for (const auto& l : m) {
            if (alg.kind(l) != RootKind::Cartan) {
                survives = false;
                break;
            }
            // V(-j,j) = -eps_j
            term = term * (lambda_var(N, l.q) * Scalar(-1));
        }
        if (survives) out += term;
    }
    return out;
}

std::vector<WeightPoly> classification_polynomials(int n) {
    SoAlgebra alg(n);
    std::set<WeightPoly> out;
    for (const auto& g : weight_zero_generators(n)) {
        WeightPoly p = hw_action(alg, g.elt);
        if (!p.is_zero()) out.insert(p.monic());
    }
    return {out.begin(), out.end()};
}

std::vector<WeightPoly> expected_classification_polynomials(int n) {
    const int N = (n + 1) / 2;
    std::set<WeightPoly> out;
    for (int a = 1; a <= N; ++a)
        for (int c = a + 1; c <= N; ++c)
            out.insert((lambda_var(N, c) * (lambda_var(N, a) + WeightPoly::constant(N, Scalar(1)))).monic());
    return {out.begin(), out.end()};
}

std::vector<WeightPoly> WeightFamily::coordinates() const {
    std::vector<WeightPoly> c;
    for (int k = 1; k <= N; ++k) c.push_back(k < t ? x_const(Scalar(-1)) : k == t ? x_var() : WeightPoly(1));
    return c;
}

std::vector<Scalar> WeightFamily::at(const Scalar& x) const {
    std::vector<Scalar> v;
    for (const auto& p : coordinates()) v.push_back(p.eval({x}));
    return v;
}

bool WeightFamily::contains(const std::vector<Scalar>& lambda) const {
    for (int k = 1; k <= N; ++k) {
        if (k < t && lambda[k - 1] != Scalar(-1)) return false;
        if (k > t && !lambda[k - 1].is_zero()) return false;
    }
    return true;
}

std::string WeightFamily::str() const {
    std::string s = "(";
    auto c = coordinates();
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? ", " : "") + poly_x(c[k]);
    return s + ")";
}

ClassificationResult solve_classification(int n) {
    const int N = (n + 1) / 2;
    ClassificationResult res;
    for (int t = 1; t <= N; ++t) res.families.push_back({t, N});
    const auto polys = classification_polynomials(n);
    res.factors_ok = polys == expected_classification_polynomials(n);

    auto solves = [&](const std::vector<Scalar>& pt) {
        return std::all_of(polys.begin(), polys.end(), [&](const WeightPoly& p) { return p.eval(pt).is_zero(); });
    };
    auto covered = [&](const std::vector<Scalar>& pt) {
        return std::any_of(res.families.begin(), res.families.end(), [&](const WeightFamily& f) { return f.contains(pt); });
    };

    // case tree: every coordinate is -1, 0 or generic (represented by 2)
    const Scalar reps[3] = {Scalar(-1), Scalar(0), Scalar(2)};
    std::vector<int> pattern(N, 0);
    while (true) {
        std::vector<Scalar> pt;
        for (int k : pattern) pt.push_back(reps[k]);
        if (solves(pt)) {
            ++res.patterns_consistent;
            // family t = last non-zero coordinate must see -1 everywhere before it
            if (!covered(pt)) ++res.patterns_uncovered;
        }
        int k = 0;
        while (k < N && ++pattern[k] == 3) pattern[k++] = 0;
        if (k == N) break;
    }

    std::vector<int> grid(N, -2);
    while (true) {
        std::vector<Scalar> pt;
        for (int g : grid) pt.push_back(Scalar(g));
        if (solves(pt)) {
            ++res.grid_solutions;
            if (!covered(pt)) ++res.grid_outside_families;
        } else if (covered(pt)) {
            ++res.family_points_failing;
        }
        int k = 0;
        while (k < N && ++grid[k] == 3) grid[k++] = -2;
        if (k == N) break;
    }
    for (const auto& f : res.families)
        for (int x = 0; x <= 3; ++x)
            if (!solves(f.at(Scalar(x)))) ++res.family_points_failing;
    return res;
}

PiExpression theorem_pi_expression(int t, int n) {
    const int m = n + 1, N = m / 2;
    if (t < 1 || t > N) throw std::invalid_argument("theorem_pi_expression: t out of range");
    PiExpression pi(N, WeightPoly(1));
    const WeightPoly x = x_var(), minus_one_minus_x = x_const(Scalar(-1)) - x_var();
    auto set = [&](int k, const WeightPoly& c) {
        if (k >= 1) pi[k - 1] = c;
    };
    if (m % 2 == 0) {
        if (t == N) {
            set(N - 1, minus_one_minus_x);
            set(N, x_const(Scalar(-1)) + x);
        } else if (t == N - 1) {
            set(N - 2, minus_one_minus_x);
            set(N - 1, x);
            set(N, x);
        } else if (t == 1) {
            set(1, x);
        } else {
            set(t - 1, minus_one_minus_x);
            set(t, x);
        }
    } else {
        if (t == 1) {
            set(1, x);
        } else {
            set(t - 1, minus_one_minus_x);
            set(t, x);
        }
    }
    return pi;
}

std::vector<WeightPoly> pi_to_epsilon(const PiExpression& pi, int n) {
    const int m = n + 1, N = m / 2;
    if (static_cast<int>(pi.size()) != N) throw std::invalid_argument("pi_to_epsilon: expected N coefficients");
    const int nv = pi.empty() ? 1 : pi.front().nvars();
    std::vector<WeightPoly> eps(N, WeightPoly(nv));
    const Scalar half = Scalar::frac(1, 2);
    const bool even = m % 2 == 0;
    const int full_limit = even ? N - 2 : N - 1;
    for (int k = 1; k <= N; ++k) {
        const WeightPoly& c = pi[k - 1];
        if (k <= full_limit) {
            for (int j = 1; j <= k; ++j) eps[j - 1] += c;
        } else if (even && k == N - 1) {
            for (int j = 1; j < N; ++j) eps[j - 1] += c * half;
            eps[N - 1] -= c * half;
        } else {
            for (int j = 1; j <= N; ++j) eps[j - 1] += c * half;
        }
    }
    return eps;
}

PiExpression epsilon_to_pi(const std::vector<WeightPoly>& eps, int n) {
    const int m = n + 1, N = m / 2;
    if (static_cast<int>(eps.size()) != N) throw std::invalid_argument("epsilon_to_pi: expected N coordinates");
    PiExpression pi;
    for (int k = 1; k < N; ++k) pi.push_back(eps[k - 1] - eps[k]);
    if (m % 2 == 0)
        pi.push_back(eps[N - 2] + eps[N - 1]);
    else
        pi.push_back(eps[N - 1] * Scalar(2));
    return pi;
}

std::string to_string(const PiExpression& pi) {
    std::string out;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (pi[k].is_zero()) continue;
        std::string c = poly_x(pi[k]);
        bool compound = pi[k].terms().size() > 1;
        std::string term = (c == "1" ? "" : c == "-1" ? "-" : compound ? "(" + c + ")*" : c + "*") + "pi" + std::to_string(k + 1);
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

Report check_classification_polynomials(int n) {
    Report rep{"classification", n};
    const int N = (n + 1) / 2;
    SoAlgebra alg(n);
    auto zero = weight_zero_generators(n);
    auto polys = classification_polynomials(n);
    auto expect = expected_classification_polynomials(n);
    auto sol = solve_classification(n);

    // generators of nonzero weight project to zero
    int nonzero_weight_nonvanishing = 0;
    Weight z(N, Rational(0));
    for (const auto& g : v_generators(n))
        if (weight_of(g, N) != z && !hw_action(alg, g.elt).is_zero()) ++nonzero_weight_nonvanishing;

    Json fams = Json::array();
    for (const auto& f : sol.families) fams.push_back(f.str());
    rep.details["weight_zero_generators"] = zero.size();
    rep.details["polynomials"] = polys_json(polys);
    rep.details["expected"] = polys_json(expect);
    rep.details["families"] = fams;
    rep.details["patterns_consistent"] = sol.patterns_consistent;
    rep.details["patterns_uncovered"] = sol.patterns_uncovered;
    rep.details["grid_solutions"] = sol.grid_solutions;
    rep.details["grid_outside_families"] = sol.grid_outside_families;
    rep.details["family_points_failing"] = sol.family_points_failing;
    rep.details["nonzero_weight_nonvanishing"] = nonzero_weight_nonvanishing;
    rep.require(static_cast<long>(zero.size()) == binomial(N, 2), "weight-zero generator count != C(N,2)");
    rep.require(sol.factors_ok, "classification polynomials differ from lambda_c(lambda_a+1)");
    rep.require(sol.patterns_uncovered == 0 && sol.grid_outside_families == 0, "solutions outside the families");
    rep.require(sol.family_points_failing == 0, "family points that do not solve the system");
    rep.require(nonzero_weight_nonvanishing == 0, "a generator of nonzero weight has nonzero projection");
    return rep;
}

Report check_fundamental_weights(int n) {
    Report rep{"fundamental-weights", n};
    const int N = (n + 1) / 2;
    Json rows = Json::array();
    int mismatches = 0, roundtrip_fail = 0;
    for (int t = 1; t <= N; ++t) {
        WeightFamily f{t, N};
        PiExpression lit = theorem_pi_expression(t, n);
        auto eps = pi_to_epsilon(lit, n);
        PiExpression correct = epsilon_to_pi(f.coordinates(), n);
        if (pi_to_epsilon(correct, n) != f.coordinates()) ++roundtrip_fail;
        bool ok = eps == f.coordinates();
        if (!ok) ++mismatches;
        Json e = Json::array();
        for (const auto& p : eps) e.push_back(poly_x(p));
        rows.push_back({{"t", t},
                        {"family", f.str()},
                        {"theorem", to_string(lit)},
                        {"theorem_epsilon", e},
                        {"matches", ok},
                        {"coroot_form", to_string(correct)}});
    }
    rep.details["parity"] = (n + 1) % 2 == 0 ? "even" : "odd";
    rep.details["rows"] = rows;
    rep.details["mismatches_count"] = mismatches;
    rep.require(roundtrip_fail == 0, "pi/epsilon conventions do not round-trip");
    rep.require(mismatches == 0, "theorem pi-expression does not expand to the family");
    return rep;
}

Report so4_route_check() {
    Report rep{"so4-route", 3};
    SoAlgebra alg(3);
    const Scalar I = Scalar::i();
    LieElt eps1 = alg.epsilon(1), eps2 = alg.epsilon(2);
    LieElt xb1 = v_elt(1, -2), yb1 = v_elt(-1, 2), xb2 = v_elt(1, 2), yb2 = v_elt(-1, -2);
    LieElt hb1 = eps2 - eps1, hb2 = (eps1 + eps2) * Scalar(-1);
    auto br = [&](const LieElt& a, const LieElt& b) { return alg.commutator(a, b); };

    int table_fail = 0;
    auto expect = [&](const LieElt& got, const LieElt& want) { table_fail += got != want; };
    expect(br(xb1, yb1), hb1);
    expect(br(xb2, yb2), hb2);
    expect(br(xb1, yb2), LieElt());
    expect(br(xb2, yb1), LieElt());
    expect(br(hb1, xb1), xb1 * Scalar(-2));
    expect(br(hb1, yb1), yb1 * Scalar(2));
    expect(br(hb2, xb2), xb2 * Scalar(-2));
    expect(br(hb2, yb2), yb2 * Scalar(2));
    expect(br(hb1, xb2), LieElt());
    expect(br(hb1, yb2), LieElt());
    expect(br(hb2, xb1), LieElt());
    expect(br(hb2, yb1), LieElt());

    LieElt x1 = xb1 * I, y1 = yb1 * I, x2 = xb2 * I, y2 = yb2 * I, h1 = -hb1, h2 = -hb2;
    int sl2_fail = 0;
    for (auto [x, y, h] : {std::tuple{x1, y1, h1}, std::tuple{x2, y2, h2}}) {
        sl2_fail += br(h, x) != x * Scalar(2);
        sl2_fail += br(h, y) != y * Scalar(-2);
        sl2_fail += br(x, y) != h;
    }
    sl2_fail += h1 != eps1 - eps2;
    sl2_fail += h2 != eps1 + eps2;

    // e^{ij} in terms of the sl(2) triples
    const Scalar half = Scalar::frac(1, 2), inv2i = (Scalar(2) * I).inv();
    int e_fail = 0;
    auto expect_e = [&](int i, int j, const LieElt& v) { e_fail += alg.from_v_basis(v) != e_elt(i, j); };
    expect_e(1, 2, (h1 + h2) * inv2i);
    expect_e(3, 4, (h2 - h1) * inv2i);
    expect_e(2, 3, (x1 + x2 - y1 - y2) * half);
    expect_e(1, 4, (x2 + y1 - x1 - y2) * half);
    expect_e(1, 3, (x1 + x2 + y1 + y2) * inv2i);
    expect_e(2, 4, (x2 + y2 - x1 - y1) * (-inv2i));

    // X = (h1^2 - h2^2)/4 + (h1 - h2)/2 + y1 x1 - y2 x2
    auto prod = [](const LieElt& a, const LieElt& b) {
        UElt u;
        for (const auto& [la, ca] : a)
            for (const auto& [lb, cb] : b) u.add(Monomial{la, lb}, ca * cb);
        return u;
    };
    UElt rhs = (prod(h1, h1) - prod(h2, h2)) * Scalar::frac(1, 4) + (u_of(h1) - u_of(h2)) * half + prod(y1, x1) - prod(y2, x2);
    UElt X = qa_generator(1, 2, 3, 4);
    bool rewrite_ok = pbw_normalize(alg, u_to_v(alg, X)) == pbw_normalize(alg, rhs);

    // mu_1 = lambda_1 - lambda_2, mu_2 = lambda_1 + lambda_2
    WeightPoly lam = hw_action(alg, X);
    WeightPoly m1 = WeightPoly::variable(2, 0), m2 = WeightPoly::variable(2, 1), one = WeightPoly::constant(2, Scalar(1));
    WeightPoly mu_poly = lam.substitute({(m1 + m2) * half, (m2 - m1) * half});
    WeightPoly stated = m1 * m1 - m2 * m2 + m1 * Scalar(2) - m2 * Scalar(2);
    bool literal = mu_poly == stated;
    bool proportional = mu_poly.monic() == stated.monic();

    // (mu1+1)^2 - (mu2+1)^2 = (mu1 - mu2)(mu1 + mu2 + 2), and the two lines pull back to lambda_2 = 0, lambda_1 = -1
    WeightPoly l1 = lambda_var(2, 1), l2 = lambda_var(2, 2), lone = WeightPoly::constant(2, Scalar(1));
    bool squares = (m1 + one) * (m1 + one) - (m2 + one) * (m2 + one) == (m1 - m2) * (m1 + m2 + one * Scalar(2)) &&
                   stated == (m1 - m2) * (m1 + m2 + one * Scalar(2));
    std::vector<WeightPoly> mu_of_lambda{l1 - l2, l1 + l2};
    bool line1 = (m1 - m2).substitute(mu_of_lambda) == l2 * Scalar(-2);
    bool line2 = (m1 + m2 + one * Scalar(2)).substitute(mu_of_lambda) == (l1 + lone) * Scalar(2);
    bool zero_set = lam.monic() == (l2 * (l1 + lone)).monic();

    const std::vector<std::string> mu_names{"mu1", "mu2"};
    rep.details["commutation_failures"] = table_fail;
    rep.details["sl2_failures"] = sl2_fail;
    rep.details["e_expression_failures"] = e_fail;
    rep.details["rewrite_holds"] = rewrite_ok;
    rep.details["lambda_polynomial"] = lam.str();
    rep.details["mu_polynomial"] = mu_poly.str(mu_names);
    rep.details["stated_mu_polynomial"] = stated.str(mu_names);
    rep.details["mu_matches_stated"] = literal;
    rep.details["mu_matches_up_to_scalar"] = proportional;
    rep.details["solution_lines"] = {"mu1 = mu2 <-> lambda2 = 0", "mu1 + mu2 = -2 <-> lambda1 = -1"};
    rep.require(table_fail == 0, "commutation table");
    rep.require(sl2_fail == 0, "sl(2) relations");
    rep.require(e_fail == 0, "e^{ij} in terms of x_j, y_j, h_j");
    rep.require(rewrite_ok, "rewritten form of X");
    rep.require(squares && line1 && line2 && zero_set, "solution set translation");
    rep.require(proportional, "X acts by a polynomial not proportional to the stated one");
    rep.require(literal, "X acts as " + mu_poly.str(mu_names) + ", not " + stated.str(mu_names));
    return rep;
}

Report joseph_check(int n) {
    if (n <= 4) throw std::invalid_argument("joseph_check: the argument is stated for n > 4");
    Report rep{"joseph", n};
    SoAlgebra alg(n);
    SymIndexer vidx(alg, Family::V);
    const int m = n + 1;

    SymElt top = sym(v_elt(1, 2), v_elt(1, 2));
    bool top_phi = phi_map(sym_from_v(alg, top), n).is_zero();
    bool top_hw = true;
    for (const auto& r : alg.root_system().raising) top_hw = top_hw && ad_sym(alg, LieElt(r), top).is_zero();

    // lowering closure by span saturation
    RowEchelon<Scalar> span;
    std::vector<SymElt> queue{top}, closure;
    span.insert(vidx.coords(top));
    int phi_fail = 0;
    while (!queue.empty()) {
        SymElt v = std::move(queue.back());
        queue.pop_back();
        if (!phi_map(sym_from_v(alg, v), n).is_zero()) ++phi_fail;
        closure.push_back(v);
        for (const auto& f : alg.root_system().lowering) {
            SymElt w = ad_sym(alg, LieElt(f), v);
            if (span.insert(vidx.coords(w))) queue.push_back(std::move(w));
        }
    }

    std::vector<SparseVec<Scalar>> R, C;
    for (const auto& g : qa_generators_sym(n)) R.push_back(vidx.coords(sym_to_v(alg, g)));
    for (const auto& v : closure) C.push_back(vidx.coords(v));
    const std::size_t closure_meet_R = intersection_dim(R, C);

    SymElt casimir_sum;
    for (int a = 1; a <= m; ++a)
        for (int i = 1; i <= m; ++i) casimir_sum += sym(e_elt(a, i), e_elt(a, i));
    bool invariant_phi = phi_map(casimir_sum, n).is_zero();

    SymIndexer eidx(alg, Family::E);
    std::vector<SparseVec<Scalar>> Re, K;
    for (const auto& g : qa_generators_sym(n)) Re.push_back(eidx.coords(g));
    for (const auto& k : ker_phi_basis(alg)) K.push_back(eidx.coords(k));
    const std::size_t R_meet_K = intersection_dim(Re, K);

    const bool ok = top_phi && top_hw && phi_fail == 0 && closure_meet_R == 0 && invariant_phi && R_meet_K == 0;
    rep.details["phi_top_zero"] = top_phi;
    rep.details["top_is_highest_weight"] = top_hw;
    rep.details["closure_dim"] = span.rank();
    if (n == 5) rep.details["closure_dim_reference"] = 84;
    rep.details["closure_phi_failures"] = phi_fail;
    rep.details["closure_meet_R"] = closure_meet_R;
    rep.details["phi_invariant_zero"] = invariant_phi;
    rep.details["R_meet_ker_phi"] = R_meet_K;
    rep.details["conclusion"] = ok ? "Q(A) is contained in J" : "inclusion not established";
    rep.require(top_phi, "phi((v1^v2)(.)(v1^v2)) != 0");
    rep.require(top_hw, "(v1^v2)(.)(v1^v2) is not a highest-weight vector");
    rep.require(phi_fail == 0, "lowering closure leaves Ker phi");
    rep.require(closure_meet_R == 0, "lowering closure meets R");
    rep.require(invariant_phi, "phi(sum S_a) != 0");
    rep.require(R_meet_K == 0, "R meets Ker phi");
    return rep;
}

}  // namespace nlie
