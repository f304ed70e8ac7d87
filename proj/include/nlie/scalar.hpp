#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <array>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nlie {

using Rational = mpq_class;

/// Element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2).
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    Scalar(const Rational& v) : a_(v) { a_.canonicalize(); }
    Scalar(Rational a, Rational b, Rational c, Rational d);

    static Scalar i() { return {0, 1, 0, 0}; }
    static Scalar sqrt2() { return {0, 0, 1, 0}; }
    static Scalar i_sqrt2() { return {0, 0, 0, 1}; }
    static Scalar frac(long num, long den);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    const Rational& component(int k) const;

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
    bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y);
    Scalar& operator/=(const Scalar& y) { return *this *= y.inv(); }
    Scalar operator-() const;

    /// Throws std::domain_error on zero.
    Scalar inv() const;

    /// i -> -i
    Scalar conj_i() const { return {a_, -b_, c_, -d_}; }
    /// sqrt2 -> -sqrt2
    Scalar conj_sqrt2() const { return {a_, b_, -c_, -d_}; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    // Lexicographic on components; used for canonical ordering only.
    friend bool operator<(const Scalar& x, const Scalar& y);

    std::string str() const;

private:
    Rational a_, b_, c_, d_;
};

inline Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
inline Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
inline Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
inline Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

std::string rational_str(const Rational& q);

using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ExactVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

}  // namespace nlie

namespace Eigen {
template <> struct NumTraits<nlie::Scalar> : GenericNumTraits<nlie::Scalar> {
    using Real = nlie::Scalar;
    using NonInteger = nlie::Scalar;
    using Nested = nlie::Scalar;
    using Literal = nlie::Scalar;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static inline nlie::Scalar epsilon() { return 0; }
    static inline nlie::Scalar dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
