#include "doctest.h"

#include "nlie/so_basis.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace nlie;

namespace {

const Scalar I = Scalar::i();
const Scalar half = Scalar::frac(1, 2);
const Scalar inv_sqrt2 = Scalar(0, 0, Rational(1, 2), 0);

LieElt random_lie(const SoAlgebra& alg, Family f, std::mt19937_64& rng) {
    LieElt x;
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const auto& l : alg.labels(f)) x.add(l, Scalar(coef(rng), coef(rng), 0, 0));
    return x;
}

}  // namespace

TEST_CASE("commutator examples") {
    SoAlgebra so4(3);
    CHECK(so4.commutator(e_elt(1, 2), e_elt(3, 4)).is_zero());
    CHECK(so4.commutator(e_elt(1, 2), e_elt(2, 3)) == e_elt(1, 3));
    CHECK(so4.commutator(e_elt(2, 3), e_elt(1, 2)) == e_elt(1, 3, -1));
    CHECK_THROWS_AS(so4.commutator(e_elt(1, 2), v_elt(1, 2)), std::invalid_argument);
    LieElt mixed = e_elt(1, 2) + v_elt(1, 2);
    CHECK_THROWS_AS(family_of(mixed), std::invalid_argument);
}

TEST_CASE("labels are canonical") {
    CHECK(e_elt(3, 1) == e_elt(1, 3, -1));
    CHECK(e_elt(2, 2).is_zero());
    CHECK(v_elt(2, -1) == v_elt(-1, 2, -1));
    SoAlgebra so5(4);
    CHECK(so5.labels(Family::E).size() == 10);
    CHECK(so5.labels(Family::V).size() == 10);
    CHECK_THROWS_AS(so5.index(LieLabel{Family::E, 1, 6}), std::invalid_argument);
    SoAlgebra so4(3);
    CHECK_THROWS_AS(so4.index(LieLabel{Family::V, 0, 1}), std::invalid_argument);
}

TEST_CASE("commutator agrees with the matrix realization on all basis pairs") {
    for (int n = 3; n <= 6; ++n) {
        SoAlgebra alg(n);
        for (Family f : {Family::E, Family::V})
            for (const auto& x : alg.labels(f))
                for (const auto& y : alg.labels(f)) {
                    ExactMatrix mx = alg.matrix_of(LieElt(x)), my = alg.matrix_of(LieElt(y));
                    ExactMatrix expect = mx.lazyProduct(my) - my.lazyProduct(mx);
                    CHECK(alg.matrix_of(alg.bracket(x, y)) == expect);
                }
    }
}

TEST_CASE("E-family matrices are E_jk - E_kj") {
    SoAlgebra alg(4);
    ExactMatrix m = alg.matrix_of(e_elt(2, 5));
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            Scalar expect = (r == 1 && c == 4) ? Scalar(1) : (r == 4 && c == 1) ? Scalar(-1) : Scalar(0);
            CHECK(m(r, c) == expect);
        }
}

TEST_CASE("bilinearity and antisymmetry") {
    std::mt19937_64 rng(2);
    for (int n = 3; n <= 6; ++n) {
        SoAlgebra alg(n);
        for (Family f : {Family::E, Family::V})
            for (int t = 0; t < 5; ++t) {
                LieElt x = random_lie(alg, f, rng), y = random_lie(alg, f, rng), z = random_lie(alg, f, rng);
                Scalar s(2, -1, 0, 0);
                CHECK(alg.commutator(x, y) == -alg.commutator(y, x));
                CHECK(alg.commutator(x * s + z, y) == alg.commutator(x, y) * s + alg.commutator(z, y));
                LieElt jac = alg.commutator(alg.commutator(x, y), z) + alg.commutator(alg.commutator(y, z), x) +
                             alg.commutator(alg.commutator(z, x), y);
                CHECK(jac.is_zero());
            }
    }
}

TEST_CASE("basis change round trips") {
    for (int n = 3; n <= 8; ++n) {
        SoAlgebra alg(n);
        for (const auto& l : alg.labels(Family::E)) CHECK(alg.from_v_basis(alg.to_v_basis(LieElt(l))) == LieElt(l));
        for (const auto& l : alg.labels(Family::V)) CHECK(alg.to_v_basis(alg.from_v_basis(LieElt(l))) == LieElt(l));
        // transport preserves the matrix
        for (const auto& l : alg.labels(Family::E)) CHECK(alg.matrix_of(alg.to_v_basis(LieElt(l))) == alg.matrix_of(LieElt(l)));
    }
}

TEST_CASE("v-basis formulas in e coordinates") {
    for (int n : {3, 4, 5, 6, 7}) {
        SoAlgebra alg(n);
        const int N = alg.N();
        for (int j = 1; j <= N; ++j) {
            // epsilon_j = i e^{2j-1,2j} = v_j ^ v_{-j}
            CHECK(alg.from_v_basis(alg.epsilon(j)) == e_elt(2 * j - 1, 2 * j, I));
            CHECK(alg.epsilon(j) == v_elt(j, -j));
            for (int k = j + 1; k <= N; ++k)
                for (int nu : {1, -1})
                    for (int mu : {1, -1}) {
                        LieElt displayed = (e_elt(2 * j - 1, 2 * k - 1) - e_elt(2 * j, 2 * k, nu * mu) -
                                            (e_elt(2 * j, 2 * k - 1, nu) + e_elt(2 * j - 1, 2 * k, mu)) * I) *
                                           half;
                        CHECK(alg.from_v_basis(v_elt(nu * j, mu * k)) == displayed);
                    }
        }
        if (alg.odd()) {
            int m = 2 * N + 1;
            for (int j = 1; j <= N; ++j)
                for (int nu : {1, -1}) {
                    LieElt displayed = (e_elt(2 * j - 1, m) - e_elt(2 * j, m, nu) * I) * inv_sqrt2;
                    // the displayed right-hand side is v_{nu j} ^ v_0 for both signs
                    CHECK(alg.from_v_basis(v_elt(nu * j, 0)) == displayed);
                    CHECK(alg.from_v_basis(v_elt(0, nu * j)) == -displayed);
                }
            // e^{2a-1+alpha, 2N+1} = -(1/sqrt2) sum_nu nu (i nu)^alpha P_nu with P_+ = v_0^v_a, P_- = v_{-a}^v_0
            for (int a = 1; a <= N; ++a)
                for (int alpha : {0, 1}) {
                    LieElt sum;
                    for (int nu : {1, -1}) {
                        Scalar c(nu);
                        if (alpha == 1) c *= I * Scalar(nu);
                        LieElt p = nu > 0 ? v_elt(0, a) : v_elt(-a, 0);
                        sum += p * c;
                    }
                    sum *= inv_sqrt2;
                    CHECK(alg.to_v_basis(e_elt(2 * a - 1 + alpha, m)) == -sum);
                }
        }
    }
}

TEST_CASE("inverse basis change for the even block") {
    // (e^{2j-1,2k-1}, e^{2j,2k}, e^{2j,2k-1}, e^{2j-1,2k}) from the four v_{nu j} ^ v_{mu k}
    SoAlgebra alg(5);
    int j = 1, k = 3;
    auto V = [&](int nu, int mu) { return v_elt(nu * j, mu * k); };
    LieElt pp = V(1, 1), pm = V(1, -1), mp = V(-1, 1), mm = V(-1, -1);
    CHECK(alg.to_v_basis(e_elt(2 * j - 1, 2 * k - 1)) == (pp + pm + mp + mm) * half);
    CHECK(alg.to_v_basis(e_elt(2 * j, 2 * k)) == (pp - pm - mp + mm) * (-half));
    CHECK(alg.to_v_basis(e_elt(2 * j, 2 * k - 1)) == (pp + pm - mp - mm) * (half * I));
    CHECK(alg.to_v_basis(e_elt(2 * j - 1, 2 * k)) == (pp - pm + mp - mm) * (half * I));
}

TEST_CASE("Cartan action on root vectors") {
    for (int n = 3; n <= 8; ++n) {
        SoAlgebra alg(n);
        const auto& rs = alg.root_system();
        for (const auto& l : alg.labels(Family::V)) {
            Weight w = alg.weight_of(l);
            for (int j = 1; j <= alg.N(); ++j) {
                // (eps_i | eps_j) = delta_ij, so [eps_j, x] = w_j x
                CHECK(alg.commutator(alg.epsilon(j), LieElt(l)) == LieElt(l) * Scalar(w[j - 1]));
            }
        }
        CHECK(rs.raising.size() == rs.lowering.size());
        CHECK(static_cast<int>(rs.cartan.size()) == alg.N());
    }
    SoAlgebra so4(3);
    CHECK(so4.commutator(so4.epsilon(1), v_elt(1, -2)) == v_elt(1, -2));
    CHECK(so4.commutator(so4.epsilon(2), v_elt(1, -2)) == v_elt(1, -2, -1));
}

TEST_CASE("root systems") {
    auto w = [](std::vector<int> c) {
        Weight out;
        for (int x : c) out.push_back(x);
        return out;
    };
    // as a set, {+-(eps_i +- eps_j) : i != j} has 4 elements when N = 2
    RootSystem d2 = root_system(3);
    CHECK(d2.roots.size() == 4);
    CHECK(d2.simple == std::vector<Weight>{w({1, -1}), w({1, 1})});
    RootSystem b2 = root_system(4);
    CHECK(b2.roots.size() == 8);
    CHECK(b2.simple == std::vector<Weight>{w({1, -1}), w({0, 1})});
    int short_roots = 0;
    for (const auto& r : b2.roots) short_roots += (abs(r[0]) + abs(r[1]) == 1);
    CHECK(short_roots == 4);
    for (int N = 2; N <= 5; ++N) CHECK(root_system(2 * N - 1).roots.size() == static_cast<std::size_t>(2 * N * (N - 1)));
    for (int N = 2; N <= 4; ++N) CHECK(root_system(2 * N).roots.size() == static_cast<std::size_t>(2 * N * N));
    // simple roots are exactly the positive roots that are not sums of two positive roots
    for (int n = 3; n <= 8; ++n) {
        RootSystem rs = root_system(n);
        std::vector<Weight> indecomposable;
        for (const auto& r : rs.positive) {
            bool sum = false;
            for (const auto& a : rs.positive)
                for (const auto& b : rs.positive) {
                    Weight s(a.size());
                    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a[k] + b[k];
                    sum = sum || s == r;
                }
            if (!sum) indecomposable.push_back(r);
        }
        std::sort(indecomposable.begin(), indecomposable.end());
        std::vector<Weight> simple = rs.simple;
        std::sort(simple.begin(), simple.end());
        CHECK(indecomposable == simple);
    }
}

TEST_CASE("weights of labels") {
    SoAlgebra so5(4), so6(5);
    CHECK(so6.weight_of(LieLabel{Family::V, 1, 2}) == Weight{1, 1, 0});
    CHECK(so6.weight_of(LieLabel{Family::V, -2, 2}) == Weight{0, 0, 0});
    CHECK(so5.weight_of(LieLabel{Family::V, -2, 0}) == Weight{0, -1});
    CHECK(so5.kind(LieLabel{Family::V, 0, 1}) == RootKind::Raising);
    CHECK(so5.kind(LieLabel{Family::V, -1, 0}) == RootKind::Lowering);
    CHECK_THROWS_AS(so5.weight_of(LieLabel{Family::E, 1, 2}), std::invalid_argument);
}
