#pragma once

#include "nlie/report.hpp"
#include "nlie/uea.hpp"

#include <string>
#include <vector>

namespace nlie {

/// The shifted Casimir on S^2(so(n+1)), E family.
class CasimirOp {
public:
    explicit CasimirOp(int n);

    int n() const { return alg_.n(); }
    const SoAlgebra& algebra() const { return alg_; }

    /// Linear extension of the six-case table for cbar(e^{ab} (.) e^{cd}).
    SymElt apply(const SymElt& s) const;
    /// c = -(1/2n) sum_{i<j} ad(e^{ij})^2 acting on S^2.
    SymElt casimir(const SymElt& s) const;
    /// (n/2) c - n Id, computed from the adjoint action.
    SymElt apply_definition(const SymElt& s) const;

    /// Sparse columns of (table - theta Id) in SymIndexer coordinates.
    std::vector<SparseVec<Scalar>> shifted_columns(const Scalar& theta) const;
    /// Basis of ker(table - theta Id).
    std::vector<SymElt> eigenspace(const Scalar& theta) const;
    std::size_t eigenspace_dim(const Scalar& theta) const;

    const SymIndexer& indexer() const { return idx_; }

private:
    SoAlgebra alg_;
    SymIndexer idx_;
};

struct EigenVector {
    std::string family;  // "B", "C" or "D"
    SymElt vec;
    Scalar claimed;
    bool holds = false;  // table(vec) == claimed * vec
};

/// The displayed eigenvector families for B, C and D with their stated eigenvalues.
std::vector<EigenVector> eigenbasis(int n);

/// Highest-weight vectors of one weight, counted inside R and inside all of S^2.
struct HighestWeightCount {
    Weight weight;
    std::size_t in_R = 0;
    std::size_t in_S2 = 0;
};

/// For each weight mu carrying a highest-weight vector of R: dim of such vectors in R and in S^2.
std::vector<HighestWeightCount> r_highest_weights(const SoAlgebra& alg);
/// Dimension of the space of vectors of weight mu in S^2 killed by every raising operator.
std::size_t s2_highest_weight_dim(const SoAlgebra& alg, const Weight& mu);

/// Table vs adjoint-action definition on every basis element.
Report check_casimir_table(int n);
/// Table eigenvalue checks for every displayed eigenvector, plus independence and count.
Report check_eigenbasis(int n);
/// Whether R is canonically characterized: R = Eig(-2), or each isotypic type of R occurs once in S^2.
Report identify_R(int n);

}  // namespace nlie
