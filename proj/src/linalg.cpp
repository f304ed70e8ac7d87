#include "nlie/linalg.hpp"

#include <stdexcept>

namespace nlie {

SparseVec<Scalar> sparse_row(const ExactMatrix& m, Eigen::Index r) {
    SparseVec<Scalar> v;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) v.emplace_back(static_cast<std::size_t>(c), m(r, c));
    return v;
}

ExactVector dense(const SparseVec<Scalar>& v, std::size_t n) {
    ExactVector out = ExactVector::Constant(static_cast<Eigen::Index>(n), Scalar(0));
    for (const auto& [k, c] : v) {
        if (k >= n) throw std::invalid_argument("dense: index out of range");
        out(static_cast<Eigen::Index>(k)) = c;
    }
    return out;
}

SolveResult solve_linear(const ExactMatrix& m, SolveMode mode, const ExactVector* target) {
    RowEchelon<Scalar> ech;
    for (Eigen::Index r = 0; r < m.rows(); ++r) ech.insert(sparse_row(m, r));
    SolveResult res;
    res.rank = ech.rank();
    const auto ncols = static_cast<std::size_t>(m.cols());
    if (mode == SolveMode::KernelBasis) {
        for (const auto& v : ech.kernel_basis(ncols)) res.kernel.push_back(dense(v, ncols));
    } else if (mode == SolveMode::Membership) {
        if (!target) throw std::invalid_argument("solve_linear: membership needs a target");
        if (target->size() != m.cols()) throw std::invalid_argument("solve_linear: dimension mismatch");
        SparseVec<Scalar> t;
        for (Eigen::Index c = 0; c < target->size(); ++c)
            if (!(*target)(c).is_zero()) t.emplace_back(static_cast<std::size_t>(c), (*target)(c));
        res.member = ech.contains(t);
    }
    return res;
}

std::size_t rank(const ExactMatrix& m) { return solve_linear(m, SolveMode::Rank).rank; }

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) { return solve_linear(m, SolveMode::KernelBasis).kernel; }

bool row_space_contains(const ExactMatrix& m, const ExactVector& target) {
    return *solve_linear(m, SolveMode::Membership, &target).member;
}

}  // namespace nlie
