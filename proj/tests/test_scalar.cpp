#include "doctest.h"

#include "nlie/linalg.hpp"
#include "nlie/scalar.hpp"
#include "nlie/weight_poly.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace nlie;

namespace {

Scalar S(long a, long b = 0, long c = 0, long d = 0) { return Scalar(a, b, c, d); }

ExactMatrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
    ExactMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
    CHECK(S(1, 1) * S(1, -1) == S(2));
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == S(2));
    CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == S(-2));
    CHECK(Scalar::i() * Scalar::sqrt2() == Scalar::sqrt2() * Scalar::i());
    CHECK(S(1) + S(-1) == S(0));
    CHECK((-S(1, 2, 3, 4)) == S(-1, -2, -3, -4));
}

TEST_CASE("scalar inverse") {
    CHECK(S(1).inv() == S(1));
    CHECK(Scalar::i().inv() == S(0, -1));
    Scalar x = S(1, 0, 1);
    CHECK(x.inv() == S(-1, 0, 1));
    CHECK(x * x.inv() == S(1));
    CHECK_THROWS_AS(S(0).inv(), std::domain_error);
}

TEST_CASE("rational components stay canonical") {
    Scalar x(Rational(2, 4), Rational(3, -6), 0, 0);
    CHECK(x.a() == Rational(1, 2));
    CHECK(x.a().get_den() == 2);
    CHECK(x.b().get_den() == 2);
    CHECK(x.b() < 0);
    CHECK(Scalar::frac(6, -4) == Scalar(Rational(-3, 2)));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        Scalar x = oracle::random_scalar(rng), y = oracle::random_scalar(rng), z = oracle::random_scalar(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x + y) - y == x);
        if (!x.is_zero()) CHECK(x * x.inv() == S(1));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("conjugations are ring homomorphisms fixing Q") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar x = oracle::random_scalar(rng), y = oracle::random_scalar(rng);
        CHECK((x * y).conj_i() == x.conj_i() * y.conj_i());
        CHECK((x + y).conj_i() == x.conj_i() + y.conj_i());
        CHECK((x * y).conj_sqrt2() == x.conj_sqrt2() * y.conj_sqrt2());
        CHECK((x + y).conj_sqrt2() == x.conj_sqrt2() + y.conj_sqrt2());
        Scalar q = oracle::random_scalar(rng, false);
        CHECK(q.conj_i() == q);
        CHECK(q.conj_sqrt2() == q);
    }
}

TEST_CASE("scalar printing") {
    CHECK(S(0).str() == "0");
    CHECK(S(1, -1).str() == "1 - i");
    CHECK(Scalar(Rational(-1, 2), 0, 0, 0).str() == "-1/2");
    CHECK(S(0, 0, 0, 3).str() == "3*i*sqrt2");
}

TEST_CASE("solve_linear examples") {
    ExactMatrix id = from_rows({{S(1), S(0)}, {S(0), S(1)}});
    CHECK(kernel_basis(id).empty());
    CHECK(rank(id) == 2);

    ExactMatrix row = from_rows({{S(1), Scalar::i()}});
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0](0) == S(0, -1));
    CHECK(k[0](1) == S(1));

    ExactVector target(2);
    target << S(2), S(0, 2);
    CHECK(row_space_contains(row, target));
    target(1) = S(1);
    CHECK_FALSE(row_space_contains(row, target));

    ExactVector wrong(3);
    wrong << S(1), S(1), S(1);
    CHECK_THROWS_AS(solve_linear(row, SolveMode::Membership, &wrong), std::invalid_argument);
}

TEST_CASE("rank plus nullity equals column count on random matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dim(1, 6), sparse(0, 2);
    for (int t = 0; t < 60; ++t) {
        Eigen::Index r = dim(rng), c = dim(rng);
        ExactMatrix m(r, c);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < c; ++j) m(i, j) = sparse(rng) == 0 ? oracle::random_scalar(rng) : S(0);
        // force a dependent row now and then
        if (r > 1 && t % 3 == 0) m.row(r - 1) = m.row(0) * Scalar::i() + m.row(r - 2);
        auto res = solve_linear(m, SolveMode::KernelBasis);
        CHECK(res.rank + res.kernel.size() == static_cast<std::size_t>(c));
        for (const auto& v : res.kernel) {
            ExactVector mv = m.lazyProduct(v);
            for (Eigen::Index i = 0; i < r; ++i) CHECK(mv(i).is_zero());
        }
    }
}

TEST_CASE("sparse echelon reduction and intersection") {
    RowEchelon<Rational> e;
    CHECK(e.insert({{0, 1}, {2, 1}}));
    CHECK(e.insert({{1, 1}, {2, -1}}));
    CHECK_FALSE(e.insert({{0, 2}, {1, 2}}));
    CHECK(e.contains({{0, 1}, {1, 1}}));
    CHECK_FALSE(e.contains({{2, 1}}));
    std::vector<SparseVec<Rational>> a{{{0, 1}}, {{1, 1}}}, b{{{1, 1}}, {{2, 1}}};
    CHECK(intersection_dim(a, b) == 1);
}

TEST_CASE("polynomial normalization") {
    WeightPoly l1 = WeightPoly::variable(2, 0), l2 = WeightPoly::variable(2, 1);
    WeightPoly one = WeightPoly::constant(2, 1);
    WeightPoly p = l2 * (l1 + one);
    CHECK(p == l1 * l2 + l2);
    CHECK(p.str() == "l1*l2 + l2");
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).str() == "0");
    CHECK(WeightPoly::from_terms(2, {{{1, 0}, 1}, {{1, 0}, -1}}).is_zero());

    WeightPoly m1 = WeightPoly::variable(2, 0), m2 = WeightPoly::variable(2, 1);
    WeightPoly q = m1 * m1 - m2 * m2 + S(2) * m1 - S(2) * m2;
    WeightPoly sub = q.substitute({l1 - l2, l1 + l2});
    CHECK(sub == S(-4) * l1 * l2 - S(4) * l2);
    CHECK(sub == S(-4) * (l2 * (l1 + one)));
    CHECK(sub.monic() == p);
    CHECK(p.eval({S(-1), S(5)}).is_zero());
    CHECK(p.eval({S(2), S(3)}) == S(9));
}
