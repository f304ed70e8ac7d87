#include "nlie/wedge.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nlie {

std::vector<int> indices_of(IndexSet s) {
    std::vector<int> out;
    for (int i = 0; i < kMaxDim; ++i)
        if (s >> i & 1u) out.push_back(i + 1);
    return out;
}

IndexSet index_set(const std::vector<int>& idx) {
    IndexSet s = 0;
    for (int i : idx) s |= IndexSet(1) << (i - 1);
    return s;
}

int popcount(IndexSet s) { return std::popcount(s); }

int wedge_sign(IndexSet s, IndexSet t) {
    if (s & t) return 0;
    // count pairs (x in S, y in T) with x > y
    int inversions = 0;
    for (int y = 0; y < kMaxDim; ++y) {
        if (!(t >> y & 1u)) continue;
        IndexSet above = y + 1 >= 32 ? 0 : (~IndexSet(0) << (y + 1));
        inversions += std::popcount(s & above);
    }
    return inversions % 2 ? -1 : 1;
}

WedgeElt::WedgeElt(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("WedgeElt: dimension out of range");
    if (grade < 0 || grade > dim) throw std::invalid_argument("WedgeElt: grade out of range");
}

WedgeElt WedgeElt::basis(int dim, const std::vector<int>& idx, const Scalar& c) {
    WedgeElt w(dim, static_cast<int>(idx.size()));
    for (int i : idx)
        if (i < 1 || i > dim) throw std::invalid_argument("WedgeElt::basis: index out of range");
    // canonicalize by insertion sort, tracking the permutation sign
    std::vector<int> v = idx;
    int sign = 1;
    for (std::size_t a = 1; a < v.size(); ++a)
        for (std::size_t b = a; b > 0 && v[b - 1] >= v[b]; --b) {
            if (v[b - 1] == v[b]) return w;
            std::swap(v[b - 1], v[b]);
            sign = -sign;
        }
    w.terms_.add(index_set(v), sign > 0 ? c : -c);
    return w;
}

WedgeElt WedgeElt::vector(int dim, const std::vector<Scalar>& coords) {
    if (static_cast<int>(coords.size()) != dim) throw std::invalid_argument("WedgeElt::vector: size");
    WedgeElt w(dim, 1);
    for (int i = 0; i < dim; ++i) w.terms_.add(IndexSet(1) << i, coords[i]);
    return w;
}

WedgeElt WedgeElt::scalar(int dim, const Scalar& c) {
    WedgeElt w(dim, 0);
    w.terms_.add(0, c);
    return w;
}

WedgeElt WedgeElt::orientation(int dim) {
    WedgeElt w(dim, dim);
    w.terms_.add(dim == 32 ? ~IndexSet(0) : (IndexSet(1) << dim) - 1, Scalar(1));
    return w;
}

void WedgeElt::add(IndexSet s, const Scalar& c) {
    if (popcount(s) != grade_) throw std::invalid_argument("WedgeElt::add: grade mismatch");
    if (dim_ < kMaxDim && (s >> dim_) != 0) throw std::invalid_argument("WedgeElt::add: index out of range");
    terms_.add(s, c);
}

void WedgeElt::require_compatible(const WedgeElt& o) const {
    if (o.dim_ != dim_ || o.grade_ != grade_) throw std::invalid_argument("WedgeElt: grade or dimension mismatch");
}

WedgeElt& WedgeElt::operator+=(const WedgeElt& o) {
    require_compatible(o);
    terms_ += o.terms_;
    return *this;
}

WedgeElt& WedgeElt::operator-=(const WedgeElt& o) {
    require_compatible(o);
    terms_ -= o.terms_;
    return *this;
}

WedgeElt& WedgeElt::operator*=(const Scalar& s) {
    terms_ *= s;
    return *this;
}

WedgeElt WedgeElt::operator-() const {
    WedgeElt r = *this;
    r.terms_ = -r.terms_;
    return r;
}

std::string WedgeElt::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        std::string mono;
        for (int i : indices_of(s)) mono += (mono.empty() ? "e" : "^e") + std::to_string(i);
        if (mono.empty()) mono = "1";
        std::string cs = c.str();
        bool neg = cs[0] == '-' && c.is_rational();
        if (neg) cs = cs.substr(1);
        std::string term = cs == "1" ? mono : (c.is_rational() ? cs : "(" + cs + ")") + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

WedgeElt wedge(const WedgeElt& x, const WedgeElt& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    int g = x.grade() + y.grade();
    if (g > x.dim()) return WedgeElt(x.dim(), x.dim());
    WedgeElt r(x.dim(), g);
    for (const auto& [s, cs] : x.terms())
        for (const auto& [t, ct] : y.terms()) {
            int sign = wedge_sign(s, t);
            if (sign == 0) continue;
            Scalar c = cs * ct;
            r.add(s | t, sign > 0 ? c : -c);
        }
    return r;
}

WedgeElt wedge_all(const std::vector<WedgeElt>& xs) {
    if (xs.empty()) throw std::invalid_argument("wedge_all: empty product");
    WedgeElt r = xs.front();
    for (std::size_t k = 1; k < xs.size(); ++k) r = wedge(r, xs[k]);
    return r;
}

WedgeElt hodge_star(const WedgeElt& w) {
    int dim = w.dim();
    IndexSet full = dim == 32 ? ~IndexSet(0) : (IndexSet(1) << dim) - 1;
    WedgeElt r(dim, dim - w.grade());
    for (const auto& [s, c] : w.terms()) {
        IndexSet comp = full & ~s;
        r.add(comp, wedge_sign(s, comp) > 0 ? c : -c);
    }
    return r;
}

}  // namespace nlie
