#pragma once

#include "nlie/lin_comb.hpp"
#include "nlie/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nlie {

/// Subset of {1..dim} as a bitmask; index i occupies bit i-1.
using IndexSet = std::uint32_t;

constexpr int kMaxDim = 31;

std::vector<int> indices_of(IndexSet s);
IndexSet index_set(const std::vector<int>& idx);
int popcount(IndexSet s);

/// Sign of e_S ^ e_T relative to e_{S u T}; 0 when S and T meet.
int wedge_sign(IndexSet s, IndexSet t);

/// Homogeneous element of the exterior algebra of C^dim.
class WedgeElt {
public:
    WedgeElt() = default;
    WedgeElt(int dim, int grade);

    /// e_{i1} ^ ... ^ e_{ik} for 1-based indices in any order (zero if repeated).
    static WedgeElt basis(int dim, const std::vector<int>& idx, const Scalar& c = Scalar(1));
    static WedgeElt vector(int dim, const std::vector<Scalar>& coords);
    static WedgeElt scalar(int dim, const Scalar& c);
    /// e_1 ^ ... ^ e_dim
    static WedgeElt orientation(int dim);

    int dim() const { return dim_; }
    int grade() const { return grade_; }
    bool is_zero() const { return terms_.is_zero(); }
    const LinComb<IndexSet>& terms() const { return terms_; }
    Scalar coeff(IndexSet s) const { return terms_.coeff(s); }
    void add(IndexSet s, const Scalar& c);

    WedgeElt& operator+=(const WedgeElt& o);
    WedgeElt& operator-=(const WedgeElt& o);
    WedgeElt& operator*=(const Scalar& s);
    WedgeElt operator-() const;
    friend WedgeElt operator+(WedgeElt x, const WedgeElt& y) { return x += y; }
    friend WedgeElt operator-(WedgeElt x, const WedgeElt& y) { return x -= y; }
    friend WedgeElt operator*(WedgeElt x, const Scalar& s) { return x *= s; }
    friend WedgeElt operator*(const Scalar& s, WedgeElt x) { return x *= s; }
    friend bool operator==(const WedgeElt& x, const WedgeElt& y) {
        return x.dim_ == y.dim_ && x.grade_ == y.grade_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const WedgeElt& x, const WedgeElt& y) { return !(x == y); }

    std::string str() const;

private:
    void require_compatible(const WedgeElt& o) const;

    int dim_ = 0;
    int grade_ = 0;
    LinComb<IndexSet> terms_;
};

WedgeElt wedge(const WedgeElt& x, const WedgeElt& y);
WedgeElt wedge_all(const std::vector<WedgeElt>& xs);

/// Complementary index set with the sign making e_S ^ *(e_S) = e_1 ^ ... ^ e_dim.
WedgeElt hodge_star(const WedgeElt& w);

}  // namespace nlie
