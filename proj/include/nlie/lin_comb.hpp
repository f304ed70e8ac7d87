#pragma once

#include "nlie/scalar.hpp"

#include <map>
#include <utility>

namespace nlie {

/// Finite formal combination sum_k c_k * key_k with no stored zero coefficients.
template <class Key, class F = Scalar> class LinComb {
public:
    using key_type = Key;
    using field_type = F;
    using map_type = std::map<Key, F>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(const Key& k, F c = F(1)) { add(k, std::move(c)); }

    void add(const Key& k, const F& c) {
        if (nlie::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (nlie::is_zero(it->second)) terms_.erase(it);
        }
    }
    void set(const Key& k, const F& c) {
        if (nlie::is_zero(c))
            terms_.erase(k);
        else
            terms_[k] = c;
    }
    F coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? F(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const F& s) {
        if (nlie::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }
    void add_scaled(const LinComb& o, const F& s) {
        if (nlie::is_zero(s)) return;
        for (const auto& [k, c] : o.terms_) add(k, c * s);
    }
    LinComb operator-() const {
        LinComb r = *this;
        for (auto& kv : r.terms_) kv.second = -kv.second;
        return r;
    }

    friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
    friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
    friend LinComb operator*(LinComb x, const F& s) { return x *= s; }
    friend LinComb operator*(const F& s, LinComb x) { return x *= s; }
    friend bool operator==(const LinComb& x, const LinComb& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const LinComb& x, const LinComb& y) { return !(x == y); }
    friend bool operator<(const LinComb& x, const LinComb& y) { return x.terms_ < y.terms_; }

    /// Apply a linear map given on keys.
    template <class Out, class Fn> Out map_linear(Fn&& fn) const {
        Out out;
        for (const auto& [k, c] : terms_) out.add_scaled(fn(k), c);
        return out;
    }

private:
    map_type terms_;
};

}  // namespace nlie
