#pragma once

#include "nlie/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nlie {

/// Sparse vector: strictly increasing column indices, no zero entries.
template <class F = Scalar> using SparseVec = std::vector<std::pair<std::size_t, F>>;

template <class F> SparseVec<F> to_sparse(const std::map<std::size_t, F>& m) {
    SparseVec<F> v;
    v.reserve(m.size());
    for (const auto& [k, c] : m)
        if (!is_zero(c)) v.emplace_back(k, c);
    return v;
}

/// Incremental row echelon form over a field. Pivot = first nonzero column,
/// pivot entries normalized to 1.
template <class F = Scalar> class RowEchelon {
public:
    RowEchelon() = default;

    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }

    /// Remainder of v modulo the current row space.
    SparseVec<F> reduce(const SparseVec<F>& v) const {
        std::map<std::size_t, F> w;
        for (const auto& [k, c] : v) w.emplace(k, c);
        auto it = w.begin();
        while (it != w.end()) {
            auto p = pivot_.find(it->first);
            if (p == pivot_.end()) {
                ++it;
                continue;
            }
            std::size_t col = it->first;
            F c = it->second;
            for (const auto& [k, r] : rows_[p->second]) {
                auto [jt, inserted] = w.try_emplace(k, F(0));
                jt->second -= c * r;
                if (is_zero(jt->second) && k != col) w.erase(jt);
            }
            w.erase(col);
            it = w.upper_bound(col);
        }
        return to_sparse(w);
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    /// Adds v to the row space; returns true when v was independent.
    bool insert(const SparseVec<F>& v) {
        SparseVec<F> r = reduce(v);
        if (r.empty()) return false;
        F inv = F(1) / r.front().second;
        for (auto& kv : r) kv.second *= inv;
        pivot_.emplace(r.front().first, rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (const auto& r : rows_) p.push_back(r.front().first);
        return p;
    }

    /// Fully reduced rows (each pivot column zero in every other row).
    std::vector<SparseVec<F>> reduced_rows() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        // process from the largest pivot down so each row only needs later rows
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return rows_[x].front().first > rows_[y].front().first; });
        RowEchelon done;
        std::vector<SparseVec<F>> out(rows_.size());
        for (std::size_t idx : order) {
            SparseVec<F> head{rows_[idx].front()};
            SparseVec<F> tail(rows_[idx].begin() + 1, rows_[idx].end());
            SparseVec<F> t = done.reduce(tail);
            head.insert(head.end(), t.begin(), t.end());
            out[idx] = head;
            done.pivot_.emplace(head.front().first, done.rows_.size());
            done.rows_.push_back(head);
        }
        return out;
    }

    /// Basis of {x : row . x = 0 for all rows} in dimension ncols.
    std::vector<SparseVec<F>> kernel_basis(std::size_t ncols) const {
        std::vector<SparseVec<F>> rref = reduced_rows();
        std::vector<std::size_t> piv(rref.size());
        std::vector<char> is_pivot(ncols, 0);
        for (std::size_t i = 0; i < rref.size(); ++i) {
            piv[i] = rref[i].front().first;
            if (piv[i] >= ncols) throw std::invalid_argument("kernel_basis: column out of range");
            is_pivot[piv[i]] = 1;
        }
        // column -> list of (row, entry) for non-pivot entries
        std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, F>>> by_col;
        for (std::size_t i = 0; i < rref.size(); ++i)
            for (std::size_t t = 1; t < rref[i].size(); ++t) by_col[rref[i][t].first].emplace_back(i, rref[i][t].second);
        std::vector<SparseVec<F>> basis;
        for (std::size_t f = 0; f < ncols; ++f) {
            if (is_pivot[f]) continue;
            std::map<std::size_t, F> x;
            x.emplace(f, F(1));
            auto it = by_col.find(f);
            if (it != by_col.end())
                for (const auto& [row, c] : it->second) x.emplace(piv[row], -c);
            basis.push_back(to_sparse(x));
        }
        return basis;
    }

private:
    std::vector<SparseVec<F>> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_;
};

template <class F> std::size_t rank_of(const std::vector<SparseVec<F>>& vs) {
    RowEchelon<F> e;
    for (const auto& v : vs) e.insert(v);
    return e.rank();
}

/// Dimension of span(A) intersect span(B), from rank(A)+rank(B)-rank(A u B).
template <class F>
std::size_t intersection_dim(const std::vector<SparseVec<F>>& a, const std::vector<SparseVec<F>>& b) {
    std::vector<SparseVec<F>> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    return rank_of(a) + rank_of(b) - rank_of(ab);
}

/// Transpose a list of sparse columns into sparse rows.
template <class F> std::vector<SparseVec<F>> transpose(const std::vector<SparseVec<F>>& cols, std::size_t nrows) {
    std::vector<SparseVec<F>> rows(nrows);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, c] : cols[j]) rows.at(i).emplace_back(j, c);
    return rows;
}

// Dense entry points over ExactMatrix.

enum class SolveMode { Rank, KernelBasis, Membership };

struct SolveResult {
    std::size_t rank = 0;
    std::vector<ExactVector> kernel;
    std::optional<bool> member;
};

/// Exact elimination on m. Membership asks whether target lies in the row space.
SolveResult solve_linear(const ExactMatrix& m, SolveMode mode, const ExactVector* target = nullptr);

std::size_t rank(const ExactMatrix& m);
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);
bool row_space_contains(const ExactMatrix& m, const ExactVector& target);

SparseVec<Scalar> sparse_row(const ExactMatrix& m, Eigen::Index r);
ExactVector dense(const SparseVec<Scalar>& v, std::size_t n);

}  // namespace nlie
