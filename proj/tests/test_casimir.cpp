#include "doctest.h"

#include "nlie/casimir.hpp"

using namespace nlie;

namespace {

// Rank via the dense elimination path, independent of the sparse echelon used by CasimirOp.
std::size_t dense_eigenspace_dim(const CasimirOp& op, const Scalar& theta) {
    const auto& idx = op.indexer();
    const auto d = static_cast<Eigen::Index>(idx.size());
    ExactMatrix m = ExactMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        SymElt b(idx.key(static_cast<std::size_t>(k)));
        for (const auto& [i, c] : idx.coords(op.apply(b) - b * theta)) m(static_cast<Eigen::Index>(i), k) = c;
    }
    return idx.size() - rank(m);
}

}  // namespace

TEST_CASE("table rows") {
    CasimirOp op(3);
    SymElt s = sym(e_elt(1, 2), e_elt(3, 4));
    CHECK(op.apply(s) == sym(e_elt(1, 4), e_elt(2, 3)) * Scalar(-1) + sym(e_elt(2, 4), e_elt(1, 3)));
    CHECK(op.apply(qa_generator_sym(1, 2, 3, 4)) == qa_generator_sym(1, 2, 3, 4) * Scalar(-2));
}

TEST_CASE("table equals the adjoint definition shifted by one") {
    for (int n = 3; n <= 6; ++n) {
        Report r = check_casimir_table(n);
        CHECK_MESSAGE(r.passed(), r.to_line());
        // never equal to the stated shift
        CHECK(r.details["table_vs_stated_shift_mismatches"] == r.details["basis_elements"]);
    }
}

TEST_CASE("adjoint Casimir is scalar on the invariant and on the adjoint-square top") {
    for (int n = 3; n <= 6; ++n) {
        CasimirOp op(n);
        SymElt inv;
        for (const auto& l : op.algebra().labels(Family::E)) inv += sym(LieElt(l), LieElt(l));
        CHECK(op.casimir(inv).is_zero());
        // the square of the highest root vector generates V(2 theta)
        const SoAlgebra& alg = op.algebra();
        SymElt top = sym_from_v(alg, sym(v_elt(1, 2), v_elt(1, 2)));
        SymElt img = op.casimir(top);
        REQUIRE(!top.is_zero());
        Scalar ratio = img.begin()->second / top.begin()->second;
        CHECK(img == top * ratio);
        CHECK(op.apply(top) == top);
    }
}

TEST_CASE("eigenvalues of the table") {
    for (int n = 3; n <= 6; ++n) {
        CasimirOp op(n);
        const int m = n + 1;
        SymElt c_vec;
        for (int i = 1; i <= m; ++i) c_vec += sym(e_elt(1, i), e_elt(2, i));
        CHECK(op.apply(c_vec) == c_vec * Scalar::frac(-(n - 3), 2));
        SymElt total;
        for (int a = 1; a <= m; ++a)
            for (int i = 1; i <= m; ++i) total += sym(e_elt(a, i), e_elt(a, i));
        CHECK(op.apply(total) == total * Scalar(-(n - 1)));
    }
}

TEST_CASE("displayed eigenvectors form a basis but some stated eigenvalues are off") {
    for (int n = 3; n <= 6; ++n) {
        auto vecs = eigenbasis(n);
        CHECK(static_cast<long>(vecs.size()) == sym2_dimension(n));
        int b_ok = 0, one_ok = 0, off = 0;
        for (const auto& v : vecs) {
            if (v.family == "B") b_ok += v.holds;
            if (v.claimed == Scalar(1)) one_ok += v.holds;
            if (!v.holds) ++off;
        }
        CHECK(b_ok == 3 * binomial(n + 1, 4));
        CHECK(off == (n + 1) * n / 2 + n + 1);
        // every vector claimed at eigenvalue 1 is correct
        CHECK(one_ok + off + binomial(n + 1, 4) == sym2_dimension(n));
        Report r = check_eigenbasis(n);
        CHECK(r.details["rank"] == sym2_dimension(n));
        CHECK(!r.passed());
    }
}

TEST_CASE("eigenspace dimensions agree with dense elimination") {
    for (int n = 3; n <= 4; ++n) {
        CasimirOp op(n);
        for (const Scalar& t : {Scalar(-2), Scalar(1), Scalar::frac(-(n - 3), 2), Scalar(-(n - 1))})
            CHECK(op.eigenspace_dim(t) == dense_eigenspace_dim(op, t));
    }
}

TEST_CASE("identification of R") {
    Report r3 = identify_R(3);
    CHECK(r3.details["dim_eigenspace_minus2"] == 2);
    CHECK(r3.details["multiplicity_one"] == false);
    CHECK(!r3.passed());

    Report r4 = identify_R(4);
    CHECK(r4.passed());
    CHECK(r4.details["dim_eigenspace_minus2"] == 5);

    Report r5 = identify_R(5);
    CHECK(r5.passed());
    CHECK(r5.details["dim_eigenspace_minus2"] == 15);
    CHECK(r5.details["spectrum"]["1"] == 84);
    CHECK(r5.details["spectrum"]["-1"] == 20);
    CHECK(r5.details["spectrum"]["-4"] == 1);

    SoAlgebra so6(5);
    CHECK(s2_highest_weight_dim(so6, Weight{1, 1, 0}) == 1);
    auto hws = r_highest_weights(so6);
    REQUIRE(hws.size() == 1);
    CHECK(hws[0].weight == Weight{1, 1, 0});
    CHECK(hws[0].in_R == 1);

    Report r6 = identify_R(6);
    CHECK(r6.passed());
    CHECK(r6.details["R_equals_eigenspace"] == true);
}

TEST_CASE("n = 7: Eig(-2) also contains the traceless square of the vector representation") {
    Report r = identify_R(7);
    CHECK(r.details["dim_eigenspace_minus2"] == 105);
    CHECK(r.details["dim_R"] == 70);
    CHECK(r.details["multiplicity_one"] == true);
    CHECK(r.passed());
    // triality: R splits into the two 35-dimensional halves
    CHECK(r.details["highest_weights_of_R"].size() == 2);
}
