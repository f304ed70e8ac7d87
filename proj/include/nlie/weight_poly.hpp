#pragma once

#include "nlie/lin_comb.hpp"
#include "nlie/scalar.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace nlie {

using Exponents = std::vector<int>;

/// Multivariate polynomial over F in a fixed number of variables.
template <class F = Scalar> class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const F& c) {
        Polynomial p(nvars);
        p.terms_.add(Exponents(nvars, 0), c);
        return p;
    }
    /// The variable with 0-based index k.
    static Polynomial variable(int nvars, int k) {
        Exponents e(nvars, 0);
        e.at(k) = 1;
        Polynomial p(nvars);
        p.terms_.add(e, F(1));
        return p;
    }
    /// Canonicalize a raw term list (duplicates merged, zeros dropped).
    static Polynomial from_terms(int nvars, const std::vector<std::pair<Exponents, F>>& raw) {
        Polynomial p(nvars);
        for (const auto& [e, c] : raw) {
            if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("Polynomial: exponent length");
            p.terms_.add(e, c);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.is_zero(); }
    const LinComb<Exponents, F>& terms() const { return terms_; }
    F coeff(const Exponents& e) const { return terms_.coeff(e); }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }

    /// Leading exponent in graded-lex order (higher total degree first, then lex).
    const Exponents& leading_exponent() const {
        if (is_zero()) throw std::domain_error("Polynomial: zero has no leading term");
        const Exponents* best = nullptr;
        for (const auto& [e, c] : terms_)
            if (!best || graded_less(*best, e)) best = &e;
        return *best;
    }
    F leading_coefficient() const { return terms_.coeff(leading_exponent()); }

    /// Scalar multiple with leading coefficient 1 (zero stays zero).
    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        r.terms_ *= leading_coefficient().inv();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        adopt(o);
        terms_ += o.terms_;
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        adopt(o);
        terms_ -= o.terms_;
        return *this;
    }
    Polynomial& operator*=(const F& s) {
        terms_ *= s;
        return *this;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        r.terms_ = -r.terms_;
        return r;
    }
    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(Polynomial x, const F& s) { return x *= s; }
    friend Polynomial operator*(const F& s, Polynomial x) { return x *= s; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
        Polynomial r(std::max(x.nvars_, y.nvars_));
        if (x.nvars_ != y.nvars_ && !x.is_zero() && !y.is_zero())
            throw std::invalid_argument("Polynomial: variable count mismatch");
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e = ex;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += ey[k];
                r.terms_.add(e, cx * cy);
            }
        return r;
    }
    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }
    friend bool operator<(const Polynomial& x, const Polynomial& y) { return x.terms_ < y.terms_; }

    F eval(const std::vector<F>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("Polynomial::eval: point size");
        F sum(0);
        for (const auto& [e, c] : terms_) {
            F t = c;
            for (int k = 0; k < nvars_; ++k)
                for (int p = 0; p < e[k]; ++p) t *= point[k];
            sum += t;
        }
        return sum;
    }

    /// Replace variable k by images[k]; all images share one variable count.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("Polynomial::substitute: arity");
        int out_vars = images.empty() ? 0 : images.front().nvars();
        Polynomial sum(out_vars);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(out_vars, c);
            for (int k = 0; k < nvars_; ++k)
                for (int p = 0; p < e[k]; ++p) t = t * images[k];
            sum += t;
        }
        return sum;
    }

    /// Terms in descending graded-lex order, e.g. "l1*l2 + l2".
    std::string str(const std::vector<std::string>& names) const;
    std::string str(const std::string& prefix = "l") const {
        std::vector<std::string> names;
        for (int k = 0; k < nvars_; ++k) names.push_back(prefix + std::to_string(k + 1));
        return str(names);
    }

    static bool graded_less(const Exponents& x, const Exponents& y) {
        int tx = total(x), ty = total(y);
        if (tx != ty) return tx < ty;
        return x < y;
    }

private:
    static int total(const Exponents& e) {
        int t = 0;
        for (int v : e) t += v;
        return t;
    }
    void adopt(const Polynomial& o) {
        if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
        if (!o.is_zero() && !is_zero() && o.nvars_ != nvars_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    int nvars_ = 0;
    LinComb<Exponents, F> terms_;
};

using WeightPoly = Polynomial<Scalar>;

std::string coefficient_str(const Scalar& c);

template <class F> std::string Polynomial<F>::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::vector<std::pair<Exponents, F>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return graded_less(y.first, x.first); });
    std::string out;
    for (const auto& [e, c] : sorted) {
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(k);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coef = coefficient_str(c);
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative) coef = coef.substr(1);
        std::string term;
        if (mono.empty())
            term = coef;
        else if (coef == "1")
            term = mono;
        else
            term = coef + "*" + mono;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace nlie
