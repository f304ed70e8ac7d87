#include "doctest.h"

#include "nlie/diagrams.hpp"
#include "nlie/highest_weight.hpp"

#include <random>

using namespace nlie;

namespace {

std::vector<Arc> all_arcs(int pts) {
    std::vector<Arc> out;
    for (int i = 1; i <= pts; ++i)
        for (int j = i + 1; j <= pts; ++j) out.push_back({i, j});
    return out;
}

DiagramSum word(int pts, const ArcWord& w) {
    DiagramSum d(pts);
    d.add(w, Scalar(1));
    return d;
}

}  // namespace

TEST_CASE("arc commutator matches the structure constants") {
    for (int n = 3; n <= 4; ++n) {
        SoAlgebra alg(n);
        for (const auto& x : all_arcs(alg.m()))
            for (const auto& y : all_arcs(alg.m())) {
                UElt got = monomial_of(arc_commutator(alg.m(), x, y));
                LieElt want = alg.bracket(LieLabel{Family::E, static_cast<std::int8_t>(x.i), static_cast<std::int8_t>(x.j)},
                                          LieLabel{Family::E, static_cast<std::int8_t>(y.i), static_cast<std::int8_t>(y.j)});
                CHECK(got == u_of(want));
            }
    }
}

TEST_CASE("orientation and concatenation") {
    CHECK(arc(4, 2, 1) == arc(4, 1, 2) * Scalar(-1));
    CHECK(arc(4, 3, 3).is_zero());
    SoAlgebra alg(3);
    DiagramSum d = diagram_of(alg, u_of(e_elt(1, 2)));
    CHECK(d == arc(4, 1, 2));
    UElt u = u_multiply(alg, u_of(e_elt(1, 2)), u_of(e_elt(3, 4)));
    CHECK(diagram_of(alg, u) == arc(4, 1, 2) * arc(4, 3, 4));
    // V-family input goes through the E basis
    UElt v = u_of(v_elt(1, 2));
    CHECK(pbw_normalize(alg, monomial_of(diagram_of(alg, v))) == u_of(alg.from_v_basis(v_elt(1, 2))));
    for (const auto& x : all_arcs(4))
        for (const auto& y : all_arcs(4)) {
            DiagramSum w = word(4, {x, y});
            CHECK(diagram_of(alg, monomial_of(w)) == w);
        }
}

TEST_CASE("crossing classes") {
    CHECK(classify({1, 2}, {3, 4}) == CrossingClass::Disjoint);
    CHECK(classify({1, 4}, {2, 3}) == CrossingClass::Nested);
    CHECK(classify({1, 3}, {2, 4}) == CrossingClass::Crossing);
    CHECK(classify({1, 3}, {3, 4}) == CrossingClass::SharedEndpoint);
    CHECK(classify({1, 3}, {1, 3}) == CrossingClass::SharedEndpoint);
    for (const auto& x : all_arcs(6))
        for (const auto& y : all_arcs(6)) CHECK(classify(x, y) == classify(y, x));
    // one crossing pair per 4-subset of points
    int crossings = 0;
    auto arcs = all_arcs(7);
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b) crossings += classify(arcs[a], arcs[b]) == CrossingClass::Crossing;
    CHECK(crossings == binomial(7, 4));
}

TEST_CASE("normal forms") {
    DiagramSum sorted = word(5, {{1, 2}, {1, 5}, {3, 4}});
    CHECK(normalize_diagram(sorted) == sorted);
    CHECK(normalize_diagram(word(4, {{1, 3}, {2, 4}})) == word(4, {{1, 2}, {3, 4}}) + word(4, {{1, 4}, {2, 3}}));
    // e^{23} e^{12} = e^{12} e^{23} + [e^{23}, e^{12}] = e^{12} e^{23} - e^{13}
    CHECK(normalize_diagram(word(4, {{2, 3}, {1, 2}})) == word(4, {{1, 2}, {2, 3}}) - arc(4, 1, 3));
    std::mt19937_64 rng(11);
    auto arcs = all_arcs(6);
    std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
    for (int t = 0; t < 40; ++t) {
        DiagramSum d = normalize_diagram(word(6, {arcs[pick(rng)], arcs[pick(rng)], arcs[pick(rng)], arcs[pick(rng)]}));
        for (const auto& [w, c] : d) {
            CHECK(is_sorted_word(w));
            CHECK(is_noncrossing(w));
        }
    }
}

TEST_CASE("Q(A) generators normalize to zero") {
    for (int n = 3; n <= 6; ++n) {
        SoAlgebra alg(n);
        for (const auto& g : qa_generators(n)) CHECK(normalize_diagram(diagram_of(alg, g)).is_zero());
        for (const auto& g : v_generators(n)) CHECK(normalize_diagram(diagram_of(alg, g.elt)).is_zero());
    }
}

TEST_CASE("confluence across random strategies") {
    std::mt19937_64 rng(2024);
    for (int n = 3; n <= 5; ++n) {
        auto arcs = all_arcs(n + 1);
        std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
        for (int t = 0; t < 25; ++t) {
            ArcWord w;
            for (int k = 0; k < 2 + t % 3; ++k) w.push_back(arcs[pick(rng)]);
            DiagramSum ref = normalize_diagram(word(n + 1, w));
            for (int s = 0; s < 20; ++s) CHECK(normalize_diagram(word(n + 1, w), random_chooser(rng)) == ref);
        }
    }
}

TEST_CASE("graphical and algebraic reductions agree modulo the truncated ideal") {
    for (int n = 3; n <= 4; ++n) {
        SoAlgebra alg(n);
        MonomialIndexer idx;
        RowEchelon<Scalar> ideal;
        auto gens = qa_generators(n);
        for (const auto& r : gens) ideal.insert(idx.coords(pbw_normalize(alg, r)));
        for (const auto& l : alg.labels(Family::E))
            for (const auto& r : gens) {
                ideal.insert(idx.coords(u_multiply(alg, u_mono({l}), r)));
                ideal.insert(idx.coords(u_multiply(alg, r, u_mono({l}))));
            }
        std::mt19937_64 rng(5);
        auto arcs = all_arcs(n + 1);
        std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
        for (int t = 0; t < 40; ++t) {
            ArcWord w;
            for (int k = 0; k < 2 + t % 2; ++k) w.push_back(arcs[pick(rng)]);
            UElt u = monomial_of(word(n + 1, w));
            UElt nf = monomial_of(normalize_diagram(word(n + 1, w)));
            CHECK(ideal.contains(idx.coords(pbw_normalize(alg, u - nf))));
        }
    }
}

TEST_CASE("non-crossing count") {
    for (int n = 3; n <= 10; ++n) {
        const long M = binomial(n + 1, 2);
        CHECK(count_noncrossing(n, 2) == M * (M + 1) / 2 - binomial(n + 1, 4));
    }
    CHECK(count_noncrossing(3, 2) == 20);
    CHECK(count_noncrossing(4, 2) == 50);
    for (int n = 3; n <= 4; ++n) CHECK(check_R_structure(n).details["dim_ker_phi"] == count_noncrossing(n, 2));
    CHECK_THROWS_AS(count_noncrossing(4, 3), std::invalid_argument);
}

TEST_CASE("Cartan arcs evaluate to lambda") {
    for (int n : {3, 4, 7}) {
        const int N = (n + 1) / 2;
        for (int j = 1; j <= N; ++j)
            CHECK(evaluate_on_highest_weight(arc(n + 1, 2 * j - 1, 2 * j, Scalar::i())) == lambda_var(N, j));
    }
    // a raising arc on the right kills the vector
    SoAlgebra alg(4);
    CHECK(evaluate_on_highest_weight(diagram_of(alg, u_of(v_elt(1, 2)))).is_zero());
    CHECK(evaluate_on_highest_weight(diagram_of(alg, u_of(v_elt(1, 0)))).is_zero());
}

TEST_CASE("evaluation agrees with hw_action on degree <= 2") {
    for (int n = 3; n <= 5; ++n) {
        SoAlgebra alg(n);
        for (const auto& x : all_arcs(alg.m()))
            for (const auto& y : all_arcs(alg.m())) {
                DiagramSum d = word(alg.m(), {x, y});
                CHECK(evaluate_on_highest_weight(d) == hw_action(alg, monomial_of(d)));
            }
    }
}

TEST_CASE("leg shifts and the graphical route") {
    const int pts = 4;
    SoAlgebra alg(3);
    DiagramSum P = diagram_of(alg, u_of(v_elt(1, 2))), Q = diagram_of(alg, u_of(v_elt(1, -2)));
    DiagramSum g1 = arc(pts, 1, 3), g2 = arc(pts, 2, 4), g3 = arc(pts, 1, 4), g4 = arc(pts, 2, 3);
    const Scalar i = Scalar::i();
    CHECK(P + Q == g1 - g4 * i);
    CHECK(Q - P == g2 + g3 * i);

    GraphicalRoute r = graphical_route(1, 2, 3);
    const WeightPoly l1 = lambda_var(2, 1), l2 = lambda_var(2, 2);
    CHECK(r.total == (l1 * l2 + l2) * Scalar(-2));
    CHECK(graphical_classification_polynomial(1, 2, 3) == r.total);
    CHECK_THROWS_AS(graphical_route(2, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(graphical_route(1, 3, 4), std::invalid_argument);
    for (int n = 3; n <= 8; ++n) {
        Report rep = check_graphical_route(n);
        CHECK_MESSAGE(rep.passed(), rep.to_line());
    }
}

TEST_CASE("render") {
    Diagram d{4, {{1, 3}, {2, 4}}, Scalar(1)};
    CHECK(d.render() == "1 2 3 4\n[---]    #1\n  [---]  #2\n");
}
