#include "nlie/so_basis.hpp"

#include <cstdlib>
#include <stdexcept>

namespace nlie {

std::string LieLabel::str() const {
    return std::string(fam == Family::E ? "e" : "v") + "[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

LieElt e_elt(int j, int k, const Scalar& c) {
    if (j == k) return {};
    if (j > k) return LieElt(LieLabel{Family::E, static_cast<std::int8_t>(k), static_cast<std::int8_t>(j)}, -c);
    return LieElt(LieLabel{Family::E, static_cast<std::int8_t>(j), static_cast<std::int8_t>(k)}, c);
}

LieElt v_elt(int p, int q, const Scalar& c) {
    if (p == q) return {};
    if (p > q) return LieElt(LieLabel{Family::V, static_cast<std::int8_t>(q), static_cast<std::int8_t>(p)}, -c);
    return LieElt(LieLabel{Family::V, static_cast<std::int8_t>(p), static_cast<std::int8_t>(q)}, c);
}

std::optional<Family> family_of(const LieElt& x) {
    std::optional<Family> f;
    for (const auto& [l, c] : x) {
        if (f && *f != l.fam) throw std::invalid_argument("LieElt mixes the E and V label families");
        f = l.fam;
    }
    return f;
}

std::string to_string(const LieElt& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [l, c] : x) {
        std::string cs = c.str();
        bool neg = c.is_rational() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::string term = cs == "1" ? l.str() : (c.is_rational() ? cs : "(" + cs + ")") + "*" + l.str();
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::string to_string(const Weight& w) {
    std::string out = "(";
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + w[k].get_str();
    return out + ")";
}

namespace {

Scalar inv_sqrt2() { return Scalar(0, 0, Rational(1, 2), 0); }

// e_a expressed in the v-basis: list of (p, coefficient).
std::vector<std::pair<int, Scalar>> e_in_v(int a, int N) {
    if (a == 2 * N + 1) return {{0, Scalar(1)}};
    int j = (a + 1) / 2;
    if (a % 2 == 1) return {{j, inv_sqrt2()}, {-j, inv_sqrt2()}};
    Scalar c = Scalar::i() * inv_sqrt2();
    return {{j, c}, {-j, -c}};
}

}  // namespace

SoAlgebra::SoAlgebra(int n) : n_(n) {
    if (n < 3 || n + 1 > 30) throw std::invalid_argument("SoAlgebra: need 3 <= n <= 29");
    const int mm = m(), NN = N();
    for (int j = 1; j <= mm; ++j)
        for (int k = j + 1; k <= mm; ++k) e_labels_.push_back({Family::E, static_cast<std::int8_t>(j), static_cast<std::int8_t>(k)});
    for (int p = -NN; p <= NN; ++p)
        for (int q = p + 1; q <= NN; ++q) {
            if (!odd() && (p == 0 || q == 0)) continue;
            v_labels_.push_back({Family::V, static_cast<std::int8_t>(p), static_cast<std::int8_t>(q)});
        }
    for (std::size_t i = 0; i < e_labels_.size(); ++i) index_[e_labels_[i]] = i;
    for (std::size_t i = 0; i < v_labels_.size(); ++i) index_[v_labels_[i]] = i;

    const std::size_t D = e_labels_.size();
    e_table_.resize(D * D);
    for (std::size_t x = 0; x < D; ++x)
        for (std::size_t y = 0; y < D; ++y) {
            int a = e_labels_[x].p, b = e_labels_[x].q, c = e_labels_[y].p, d = e_labels_[y].q;
            LieElt r;
            if (b == c) r += e_elt(a, d);
            if (a == c) r -= e_elt(b, d);
            if (b == d) r -= e_elt(a, c);
            if (a == d) r += e_elt(b, c);
            e_table_[x * D + y] = r;
        }

    to_v_.resize(D);
    for (std::size_t x = 0; x < D; ++x) {
        LieElt r;
        for (const auto& [p, cp] : e_in_v(e_labels_[x].p, NN))
            for (const auto& [q, cq] : e_in_v(e_labels_[x].q, NN)) r += v_elt(p, q, cp * cq);
        to_v_[x] = r;
    }
    from_v_.resize(D);
    for (std::size_t x = 0; x < D; ++x) {
        std::vector<Scalar> vp = v_vector(v_labels_[x].p), vq = v_vector(v_labels_[x].q);
        LieElt r;
        for (int a = 0; a < mm; ++a) {
            if (vp[a].is_zero()) continue;
            for (int b = 0; b < mm; ++b)
                if (!vq[b].is_zero()) r += e_elt(a + 1, b + 1, vp[a] * vq[b]);
        }
        from_v_[x] = r;
    }
    v_table_.resize(D * D);
    for (std::size_t x = 0; x < D; ++x)
        for (std::size_t y = x; y < D; ++y) {
            LieElt r = to_v_basis(commutator(from_v_[x], from_v_[y]));
            v_table_[x * D + y] = r;
            v_table_[y * D + x] = -r;
        }

    roots_.N = NN;
    roots_.odd = odd();
    for (const auto& l : v_labels_) {
        switch (kind(l)) {
        case RootKind::Cartan: roots_.cartan.push_back(l); continue;
        case RootKind::Raising:
            roots_.raising.push_back(l);
            roots_.positive.push_back(weight_of(l));
            break;
        case RootKind::Lowering: roots_.lowering.push_back(l); break;
        }
        roots_.roots.push_back(weight_of(l));
    }
    for (int i = 1; i < NN; ++i) {
        Weight w(NN, 0);
        w[i - 1] = 1;
        w[i] = -1;
        roots_.simple.push_back(w);
    }
    Weight last(NN, 0);
    if (odd()) {
        last[NN - 1] = 1;
    } else {
        last[NN - 2] = 1;
        last[NN - 1] = 1;
    }
    roots_.simple.push_back(last);
}

void SoAlgebra::check_label(const LieLabel& l) const {
    if (!index_.count(l)) throw std::invalid_argument("SoAlgebra: label " + l.str() + " not in so(" + std::to_string(m()) + ")");
}

std::size_t SoAlgebra::index(const LieLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw std::invalid_argument("SoAlgebra: label " + l.str() + " not in so(" + std::to_string(m()) + ")");
    return it->second;
}

const LieElt& SoAlgebra::bracket(const LieLabel& x, const LieLabel& y) const {
    if (x.fam != y.fam) throw std::invalid_argument("commutator: mixed label families");
    const std::size_t D = e_labels_.size();
    std::size_t k = index(x) * D + index(y);
    return x.fam == Family::E ? e_table_[k] : v_table_[k];
}

LieElt SoAlgebra::commutator(const LieElt& x, const LieElt& y) const {
    auto fx = family_of(x), fy = family_of(y);
    if (fx && fy && *fx != *fy) throw std::invalid_argument("commutator: mixed label families");
    LieElt r;
    for (const auto& [lx, cx] : x)
        for (const auto& [ly, cy] : y) r.add_scaled(bracket(lx, ly), cx * cy);
    return r;
}

const LieElt& SoAlgebra::to_v_basis(const LieLabel& l) const {
    if (l.fam != Family::E) throw std::invalid_argument("to_v_basis: expected an E-family label");
    return to_v_[index(l)];
}

const LieElt& SoAlgebra::from_v_basis(const LieLabel& l) const {
    if (l.fam != Family::V) throw std::invalid_argument("from_v_basis: expected a V-family label");
    return from_v_[index(l)];
}

LieElt SoAlgebra::to_v_basis(const LieElt& x) const {
    LieElt r;
    for (const auto& [l, c] : x) r.add_scaled(to_v_basis(l), c);
    return r;
}

LieElt SoAlgebra::from_v_basis(const LieElt& x) const {
    LieElt r;
    for (const auto& [l, c] : x) r.add_scaled(from_v_basis(l), c);
    return r;
}

ExactMatrix SoAlgebra::matrix_of(const LieElt& x) const {
    ExactMatrix mat = ExactMatrix::Constant(m(), m(), Scalar(0));
    auto fam = family_of(x);
    const LieElt& ex = (fam && *fam == Family::V) ? from_v_basis(x) : x;
    for (const auto& [l, c] : ex) {
        check_label(l);
        mat(l.p - 1, l.q - 1) += c;
        mat(l.q - 1, l.p - 1) -= c;
    }
    return mat;
}

std::vector<Scalar> SoAlgebra::v_vector(int p) const {
    if (std::abs(p) > N() || (p == 0 && !odd())) throw std::invalid_argument("v_vector: index out of range");
    std::vector<Scalar> v(m(), Scalar(0));
    if (p == 0) {
        v[2 * N()] = Scalar(1);
        return v;
    }
    int j = std::abs(p);
    v[2 * j - 2] = inv_sqrt2();
    // v_{+j} = (e_{2j-1} - i e_{2j})/sqrt2, v_{-j} = (e_{2j-1} + i e_{2j})/sqrt2
    v[2 * j - 1] = (p > 0 ? -Scalar::i() : Scalar::i()) * inv_sqrt2();
    return v;
}

LieElt SoAlgebra::epsilon(int j) const {
    if (j < 1 || j > N()) throw std::invalid_argument("epsilon: index out of range");
    return v_elt(j, -j);
}

Weight SoAlgebra::weight_of(const LieLabel& l) const {
    if (l.fam != Family::V) throw std::invalid_argument("weight_of: expected a V-family label");
    check_label(l);
    Weight w(N(), 0);
    for (int p : {int(l.p), int(l.q)})
        if (p != 0) w[std::abs(p) - 1] += p > 0 ? 1 : -1;
    return w;
}

RootKind SoAlgebra::kind(const LieLabel& l) const {
    for (const auto& c : weight_of(l)) {
        if (sgn(c) > 0) return RootKind::Raising;
        if (sgn(c) < 0) return RootKind::Lowering;
    }
    return RootKind::Cartan;
}

RootSystem root_system(int n) { return SoAlgebra(n).root_system(); }

Weight weight_of(const SoAlgebra& alg, const LieLabel& l) { return alg.weight_of(l); }

}  // namespace nlie
