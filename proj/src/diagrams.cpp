#include "nlie/diagrams.hpp"

#include "nlie/highest_weight.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace nlie {

namespace {

Scalar inv_sqrt2() { return Scalar::sqrt2() * Scalar::frac(1, 2); }

LieLabel e_label(const Arc& a) {
    return LieLabel{Family::E, static_cast<std::int8_t>(a.i), static_cast<std::int8_t>(a.j)};
}

int crossing_count(const ArcWord& w) {
    int c = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q) c += classify(w[p], w[q]) == CrossingClass::Crossing;
    return c;
}

// xy = yx + [x,y] at positions p, p+1
DiagramSum swap_at(int points, const ArcWord& w, std::size_t p) {
    DiagramSum out(points);
    ArcWord s = w;
    std::swap(s[p], s[p + 1]);
    out.add(s, Scalar(1));
    for (const auto& [mid, c] : arc_commutator(points, w[p], w[p + 1])) {
        ArcWord r(w.begin(), w.begin() + static_cast<long>(p));
        r.insert(r.end(), mid.begin(), mid.end());
        r.insert(r.end(), w.begin() + static_cast<long>(p) + 2, w.end());
        out.add(r, c);
    }
    return out;
}

// Bring w[q] next to w[p], then e^{ik} e^{jl} -> e^{ij} e^{kl} + e^{il} e^{jk}.
DiagramSum resolve_crossing(int points, const ArcWord& w, std::size_t p, std::size_t q) {
    DiagramSum out(points);
    ArcWord cur = w;
    for (std::size_t r = q - 1; r > p; --r) {
        // cur[r] cur[r+1] = cur[r+1] cur[r] + [cur[r], cur[r+1]]; keep the swapped word, emit the correction
        for (const auto& [mid, c] : arc_commutator(points, cur[r], cur[r + 1])) {
            ArcWord t(cur.begin(), cur.begin() + static_cast<long>(r));
            t.insert(t.end(), mid.begin(), mid.end());
            t.insert(t.end(), cur.begin() + static_cast<long>(r) + 2, cur.end());
            out.add(t, c);
        }
        std::swap(cur[r], cur[r + 1]);
    }
    std::array<int, 4> pts{cur[p].i, cur[p].j, cur[p + 1].i, cur[p + 1].j};
    std::sort(pts.begin(), pts.end());
    const auto [i, j, k, l] = pts;
    for (const auto& repl : {std::array<Arc, 2>{Arc{i, j}, Arc{k, l}}, std::array<Arc, 2>{Arc{i, l}, Arc{j, k}}}) {
        ArcWord t = cur;
        t[p] = repl[0];
        t[p + 1] = repl[1];
        out.add(t, Scalar(1));
    }
    return out;
}

struct Rewrite {
    bool crossing;
    std::size_t p, q;
};

std::vector<Rewrite> rewrites(const ArcWord& w) {
    std::vector<Rewrite> out;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q)
            if (classify(w[p], w[q]) == CrossingClass::Crossing) out.push_back({true, p, q});
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) out.push_back({false, p, p + 1});
    return out;
}

// --- evaluation on the highest weight vector ---

// e_{2m-1} = (v_m + v_{-m})/sqrt2, e_{2m} = i (v_m - v_{-m})/sqrt2, e_{2N+1} = v_0
std::vector<std::pair<int, Scalar>> point_in_v(int p, int N) {
    if (p == 2 * N + 1) return {{0, Scalar(1)}};
    const int m = (p + 1) / 2;
    if (p % 2 == 1) return {{m, inv_sqrt2()}, {-m, inv_sqrt2()}};
    return {{m, Scalar::i() * inv_sqrt2()}, {-m, -Scalar::i() * inv_sqrt2()}};
}

// v_{+m} = (e_{2m-1} - i e_{2m})/sqrt2, v_{-m} = (e_{2m-1} + i e_{2m})/sqrt2, v_0 = e_{2N+1}
std::vector<std::pair<int, Scalar>> v_in_points(int s, int N) {
    if (s == 0) return {{2 * N + 1, Scalar(1)}};
    const int m = std::abs(s);
    return {{2 * m - 1, inv_sqrt2()}, {2 * m, (s > 0 ? -Scalar::i() : Scalar::i()) * inv_sqrt2()}};
}

DiagramSum v_wedge(int points, int s, int t) {
    const int N = points / 2;
    DiagramSum out(points);
    for (const auto& [p, cp] : v_in_points(s, N))
        for (const auto& [q, cq] : v_in_points(t, N)) out.add_oriented({{p, q}}, cp * cq);
    return out;
}

bool is_cartan_arc(const Arc& a) { return a.i % 2 == 1 && a.j == a.i + 1; }

bool raising_wedge(int s, int t) {
    if (s == 0) return t > 0;
    if (t == 0) return s > 0;
    return std::abs(s) < std::abs(t) ? s > 0 : t > 0;
}

class HighestWeightEvaluator {
public:
    explicit HighestWeightEvaluator(int points) : points_(points), N_(points / 2) {}

    WeightPoly eval(const DiagramSum& d) const {
        WeightPoly out(N_);
        for (const auto& [w, c] : d) out += eval_word(w) * c;
        return out;
    }

private:
    // epsilon_m = i e^{2m-1,2m}, so the arc acts by -i lambda_m
    WeightPoly cartan_value(const Arc& a) const {
        return WeightPoly::variable(N_, (a.i + 1) / 2 - 1) * (-Scalar::i());
    }

    // lowering part of a mixed arc after shifting its legs (raising parts kill the vector)
    DiagramSum lowering_part(const Arc& a) const {
        DiagramSum out(points_);
        for (const auto& [s, cs] : point_in_v(a.i, N_))
            for (const auto& [t, ct] : point_in_v(a.j, N_))
                if (!raising_wedge(s, t)) out += v_wedge(points_, s, t) * (cs * ct);
        return out;
    }

    WeightPoly eval_word(const ArcWord& w) const {
        if (w.empty()) return WeightPoly::constant(N_, Scalar(1));
        const Arc& y = w.back();
        ArcWord rest(w.begin(), w.end() - 1);
        if (is_cartan_arc(y)) return eval_word(rest) * cartan_value(y);
        // x_1..x_r L v = sum_s x_1..[x_s, L]..x_r v + L x_1..x_r v, and the last term has lower weight
        WeightPoly out(N_);
        for (const auto& [lw, lc] : lowering_part(y)) {
            const Arc& z = lw.front();
            for (std::size_t s = 0; s < rest.size(); ++s)
                for (const auto& [mid, c] : arc_commutator(points_, rest[s], z)) {
                    ArcWord t(rest.begin(), rest.begin() + static_cast<long>(s));
                    t.insert(t.end(), mid.begin(), mid.end());
                    t.insert(t.end(), rest.begin() + static_cast<long>(s) + 1, rest.end());
                    out += eval_word(t) * (c * lc);
                }
        }
        return out;
    }

    int points_;
    int N_;
};

}  // namespace

CrossingClass classify(const Arc& x, const Arc& y) {
    if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) return CrossingClass::SharedEndpoint;
    const Arc& a = x.i < y.i ? x : y;
    const Arc& b = x.i < y.i ? y : x;
    if (a.j < b.i) return CrossingClass::Disjoint;
    if (b.j < a.j) return CrossingClass::Nested;
    return CrossingClass::Crossing;
}

std::string to_string(CrossingClass c) {
    switch (c) {
        case CrossingClass::Disjoint: return "disjoint";
        case CrossingClass::Nested: return "nested";
        case CrossingClass::SharedEndpoint: return "shared-endpoint";
        case CrossingClass::Crossing: return "crossing";
    }
    return "?";
}

std::string Diagram::render() const {
    const int width = static_cast<int>(std::to_string(points).size()) + 1;
    auto col = [&](int p) { return (p - 1) * width; };
    std::ostringstream os;
    std::string labels;
    for (int p = 1; p <= points; ++p) {
        std::string s = std::to_string(p);
        labels += s + std::string(static_cast<std::size_t>(width) - s.size(), ' ');
    }
    while (!labels.empty() && labels.back() == ' ') labels.pop_back();
    os << labels << '\n';
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        const Arc& a = arcs[k];
        std::string line(static_cast<std::size_t>(col(a.i)), ' ');
        line += '[';
        line += std::string(static_cast<std::size_t>(col(a.j) - col(a.i) - 1), '-');
        line += ']';
        line += std::string(static_cast<std::size_t>(col(points) + width - col(a.j)), ' ');
        os << line << '#' << k + 1 << '\n';
    }
    return os.str();
}

void DiagramSum::add_oriented(const std::vector<std::pair<int, int>>& oriented, const Scalar& c) {
    ArcWord w;
    Scalar s = c;
    for (const auto& [p, q] : oriented) {
        if (p == q) return;
        if (p < 1 || q < 1 || p > points_ || q > points_) throw std::invalid_argument("DiagramSum: point out of range");
        if (p < q) {
            w.push_back({p, q});
        } else {
            w.push_back({q, p});
            s = -s;
        }
    }
    terms_.add(w, s);
}

std::vector<Diagram> DiagramSum::diagrams() const {
    std::vector<Diagram> out;
    for (const auto& [w, c] : terms_) out.push_back({points_, w, c});
    return out;
}

int DiagramSum::max_degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& o) {
    terms_ += o.terms_;
    return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& o) {
    terms_ -= o.terms_;
    return *this;
}

DiagramSum& DiagramSum::operator*=(const Scalar& s) {
    terms_ *= s;
    return *this;
}

DiagramSum operator*(const DiagramSum& a, const DiagramSum& b) {
    if (a.points_ != b.points_) throw std::invalid_argument("DiagramSum: point counts differ");
    DiagramSum out(a.points_);
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            ArcWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.terms_.add(w, ca * cb);
        }
    return out;
}

DiagramSum DiagramSum::conj() const {
    DiagramSum out(points_);
    for (const auto& [w, c] : terms_) out.terms_.add(w, c.conj_i());
    return out;
}

std::string DiagramSum::str() const {
    if (terms_.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (const auto& a : w) out += "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
    }
    return out;
}

std::string DiagramSum::render() const {
    std::string out;
    for (const auto& d : diagrams()) out += "coeff " + d.coeff.str() + "\n" + d.render();
    return out;
}

DiagramSum arc(int points, int from, int to, const Scalar& c) {
    DiagramSum d(points);
    d.add_oriented({{from, to}}, c);
    return d;
}

DiagramSum unit_diagram(int points) {
    DiagramSum d(points);
    d.add(ArcWord{}, Scalar(1));
    return d;
}

DiagramSum diagram_of(const SoAlgebra& alg, const UElt& u) {
    const int pts = alg.m();
    DiagramSum out(pts);
    for (const auto& [m, c] : u) {
        DiagramSum term = unit_diagram(pts) * c;
        for (const auto& l : m) {
            DiagramSum factor(pts);
            if (l.fam == Family::E) {
                factor.add_oriented({{l.p, l.q}}, Scalar(1));
            } else {
                for (const auto& [el, ec] : alg.from_v_basis(l)) factor.add_oriented({{el.p, el.q}}, ec);
            }
            term = term * factor;
        }
        out += term;
    }
    return out;
}

UElt monomial_of(const Diagram& d) {
    Monomial m;
    for (const auto& a : d.arcs) m.push_back(e_label(a));
    return u_mono(m, d.coeff);
}

UElt monomial_of(const DiagramSum& d) {
    UElt out;
    for (const auto& [w, c] : d) out += monomial_of(Diagram{d.points(), w, c});
    return out;
}

DiagramSum arc_commutator(int points, const Arc& x, const Arc& y) {
    // [e^{pq}, e^{rs}] = d_qr e^{ps} - d_qs e^{pr} - d_pr e^{qs} + d_ps e^{qr}
    DiagramSum out(points);
    const int p = x.i, q = x.j, r = y.i, s = y.j;
    if (q == r) out.add_oriented({{p, s}}, Scalar(1));
    if (q == s) out.add_oriented({{p, r}}, Scalar(-1));
    if (p == r) out.add_oriented({{q, s}}, Scalar(-1));
    if (p == s) out.add_oriented({{q, r}}, Scalar(1));
    return out;
}

bool is_sorted_word(const ArcWord& w) { return std::is_sorted(w.begin(), w.end()); }

bool is_noncrossing(const ArcWord& w) { return crossing_count(w) == 0; }

RewriteChooser random_chooser(std::mt19937_64& rng) {
    std::mt19937_64* r = &rng;
    return [r](std::size_t options) {
        std::uniform_int_distribution<std::size_t> pick(0, options - 1);
        return pick(*r);
    };
}

DiagramSum normalize_diagram(const DiagramSum& d, const RewriteChooser& choose) {
    // Each rewrite lowers (degree, crossing count, inversion count) lexicographically.
    const int pts = d.points();
    LinComb<ArcWord, Scalar> work = d.terms();
    DiagramSum done(pts);
    std::size_t steps = 0;
    while (!work.is_zero()) {
        if (++steps > 50'000'000) throw std::logic_error("normalize_diagram: no fixpoint");
        auto last = std::prev(work.end());
        const ArcWord w = last->first;
        const Scalar c = last->second;
        work.set(w, Scalar(0));
        auto options = rewrites(w);
        if (options.empty()) {
            done.add(w, c);
            continue;
        }
        const Rewrite& rw = options[choose ? choose(options.size()) : 0];
        DiagramSum next = rw.crossing ? resolve_crossing(pts, w, rw.p, rw.q) : swap_at(pts, w, rw.p);
        work.add_scaled(next.terms(), c);
    }
    return done;
}

long count_noncrossing(int n, int degree) {
    if (degree != 2) throw std::invalid_argument("count_noncrossing: only degree 2 is supported");
    return count_noncrossing_words(n, degree);
}

long count_noncrossing_words(int n, int degree) {
    if (n < 2 || degree < 0) throw std::invalid_argument("count_noncrossing_words: bad arguments");
    const int pts = n + 1;
    std::vector<Arc> arcs;
    for (int i = 1; i <= pts; ++i)
        for (int j = i + 1; j <= pts; ++j) arcs.push_back({i, j});
    long count = 0;
    ArcWord w;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(w.size()) == degree) {
            ++count;
            return;
        }
        for (std::size_t a = from; a < arcs.size(); ++a) {
            bool ok = true;
            for (const auto& x : w) ok = ok && classify(x, arcs[a]) != CrossingClass::Crossing;
            if (!ok) continue;
            w.push_back(arcs[a]);
            rec(a);
            w.pop_back();
        }
    };
    rec(0);
    return count;
}

GraphicalRoute graphical_route(int j, int k, int n) {
    const int pts = n + 1, N = pts / 2;
    if (!(1 <= j && j < k && k <= N)) throw std::invalid_argument("graphical_route: need 1 <= j < k <= N");
    // both annihilate the highest weight vector
    DiagramSum P = v_wedge(pts, j, k), Q = v_wedge(pts, j, -k);
    DiagramSum K1 = P + Q;  // g1 - i g4
    DiagramSum K2 = Q - P;  // g2 + i g3
    HighestWeightEvaluator ev(pts);
    GraphicalRoute r;
    r.j = j;
    r.k = k;
    r.first = ev.eval(normalize_diagram(K1.conj() * K2));
    r.second = ev.eval(normalize_diagram(K2.conj() * K1));
    r.total = r.first + r.second;
    return r;
}

WeightPoly evaluate_on_highest_weight(const DiagramSum& d) { return HighestWeightEvaluator(d.points()).eval(d); }

WeightPoly graphical_classification_polynomial(int j, int k, int n) { return graphical_route(j, k, n).total; }

Report check_graphical_route(int n) {
    Report rep{"graphical-route", n};
    SoAlgebra alg(n);
    const int N = alg.N();
    Json pairs = Json::array();
    int literal_fail = 0, route_fail = 0;
    for (const auto& g : weight_zero_generators(n)) {
        const int j = g.index[0], k = g.index[2];
        GraphicalRoute r = graphical_route(j, k, n);
        WeightPoly algebraic = hw_action(alg, g.elt);
        WeightPoly stated = lambda_var(N, k) * (lambda_var(N, j) + WeightPoly::constant(N, Scalar(1))) * Scalar(-2);
        const bool literal = r.total == stated;
        const bool agree = !r.total.is_zero() && !algebraic.is_zero() && r.total.monic() == algebraic.monic();
        literal_fail += !literal;
        route_fail += !agree;
        pairs.push_back({{"j", j},
                         {"k", k},
                         {"graphical", r.total.str()},
                         {"algebraic", algebraic.str()},
                         {"matches_stated", literal},
                         {"routes_agree", agree}});
    }
    rep.details["pairs"] = pairs;
    rep.require(route_fail == 0, "graphical and algebraic polynomials differ after scaling");
    rep.require(literal_fail == 0, "graphical polynomial differs from -2 lambda_k (lambda_j + 1)");
    return rep;
}

Report check_diagram_calculus(int n, int strategies, std::uint64_t seed) {
    Report rep{"diagrams", n};
    SoAlgebra alg(n);
    const int pts = alg.m();

    int generator_failures = 0;
    for (const auto& g : qa_generators(n))
        if (!normalize_diagram(diagram_of(alg, g)).is_zero()) ++generator_failures;

    std::vector<DiagramSum> corpus;
    std::vector<Arc> arcs;
    for (int i = 1; i <= pts; ++i)
        for (int j = i + 1; j <= pts; ++j) arcs.push_back({i, j});
    for (const auto& x : arcs)
        for (const auto& y : arcs) {
            DiagramSum d(pts);
            d.add(ArcWord{x, y}, Scalar(1));
            corpus.push_back(d);
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
    for (int t = 0; t < 20; ++t) {
        DiagramSum d(pts);
        d.add(ArcWord{arcs[pick(rng)], arcs[pick(rng)], arcs[pick(rng)]}, Scalar(1));
        corpus.push_back(d);
    }
    int confluence_failures = 0;
    Json first_counterexample;
    for (const auto& d : corpus) {
        DiagramSum ref = normalize_diagram(d);
        for (int s = 0; s < strategies; ++s) {
            DiagramSum other = normalize_diagram(d, random_chooser(rng));
            if (other != ref) {
                if (confluence_failures == 0) first_counterexample = {{"input", d.str()}, {"a", ref.str()}, {"b", other.str()}};
                ++confluence_failures;
                break;
            }
        }
    }

    const long M = binomial(pts, 2);
    const long formula = M * (M + 1) / 2 - binomial(pts, 4);
    const long count = count_noncrossing(n, 2);

    rep.details["generators"] = binomial(pts, 4);
    rep.details["generator_failures"] = generator_failures;
    rep.details["corpus_size"] = corpus.size();
    rep.details["strategies"] = strategies;
    rep.details["confluence_failures"] = confluence_failures;
    if (confluence_failures) rep.details["counterexample"] = first_counterexample;
    rep.details["noncrossing_degree2"] = count;
    rep.details["noncrossing_formula"] = formula;
    rep.details["noncrossing_degree3"] = count_noncrossing_words(n, 3);
    rep.require(generator_failures == 0, "a Q(A) generator does not normalize to zero");
    rep.require(confluence_failures == 0, "normal form depends on the rewrite order");
    rep.require(count == formula, "non-crossing count differs from M(M+1)/2 - C(n+1,4)");
    return rep;
}

}  // namespace nlie
