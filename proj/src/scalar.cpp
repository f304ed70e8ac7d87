#include "nlie/scalar.hpp"

#include <ostream>

namespace nlie {

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
}

Scalar Scalar::frac(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar::frac: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

const Rational& Scalar::component(int k) const {
    switch (k) {
    case 0: return a_;
    case 1: return b_;
    case 2: return c_;
    case 3: return d_;
    }
    throw std::out_of_range("Scalar::component");
}

Scalar& Scalar::operator+=(const Scalar& y) {
    a_ += y.a_;
    b_ += y.b_;
    c_ += y.c_;
    d_ += y.d_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
    a_ -= y.a_;
    b_ -= y.b_;
    c_ -= y.c_;
    d_ -= y.d_;
    return *this;
}

Scalar Scalar::operator-() const { return {-a_, -b_, -c_, -d_}; }

Scalar& Scalar::operator*=(const Scalar& y) {
    // Most coefficients in this code base are pure rationals or pure
    // imaginary, so the zero-skipping below saves most of the products.
    if (is_rational() && y.is_rational()) {
        a_ *= y.a_;
        return *this;
    }
    const Rational* x[4] = {&a_, &b_, &c_, &d_};
    const Rational* z[4] = {&y.a_, &y.b_, &y.c_, &y.d_};
    // basis products e_p*e_q = sign * mult * e_r for the basis {1, i, s, is}
    static constexpr int target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int factor[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, 2, 2}, {1, -1, 2, -2}};
    Rational r[4];
    Rational t;
    for (int p = 0; p < 4; ++p) {
        if (sgn(*x[p]) == 0) continue;
        for (int q = 0; q < 4; ++q) {
            if (sgn(*z[q]) == 0) continue;
            t = *x[p] * *z[q];
            int f = factor[p][q];
            if (f == 1)
                r[target[p][q]] += t;
            else if (f == -1)
                r[target[p][q]] -= t;
            else
                r[target[p][q]] += f * t;
        }
    }
    a_ = std::move(r[0]);
    b_ = std::move(r[1]);
    c_ = std::move(r[2]);
    d_ = std::move(r[3]);
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar::inv: division by zero");
    if (is_rational()) return Scalar(Rational(1) / a_);
    // x * conj_i(x) = u^2 + v^2 lies in Q(sqrt2); invert that by its own conjugate.
    Scalar bar = conj_i();
    Scalar norm = *this * bar;
    Rational p = norm.a_, q = norm.c_;
    Rational den = p * p - 2 * q * q;
    Scalar norm_inv(p / den, 0, -q / den, 0);
    return bar * norm_inv;
}

bool operator<(const Scalar& x, const Scalar& y) {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(x.component(k), y.component(k));
        if (c != 0) return c < 0;
    }
    return false;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Scalar::str() const {
    static const char* unit[4] = {"", "i", "sqrt2", "i*sqrt2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        const Rational& q = component(k);
        if (sgn(q) == 0) continue;
        Rational mag = abs(q);
        std::string term;
        if (k == 0)
            term = mag.get_str();
        else if (mag == 1)
            term = unit[k];
        else
            term = mag.get_str() + "*" + unit[k];
        if (out.empty())
            out = (sgn(q) < 0 ? "-" : "") + term;
        else
            out += (sgn(q) < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace nlie
