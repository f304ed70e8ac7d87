#pragma once

#include "nlie/lin_comb.hpp"
#include "nlie/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nlie {

enum class Family : std::uint8_t { E, V };

/// Basis label of so(n+1): E(j,k) = e^{jk} = E_jk - E_kj with j<k, or
/// V(p,q) = v_p ^ v_q with p<q in -N..N.
struct LieLabel {
    Family fam = Family::E;
    std::int8_t p = 0;
    std::int8_t q = 0;
    friend auto operator<=>(const LieLabel&, const LieLabel&) = default;
    std::string str() const;
};

using LieElt = LinComb<LieLabel>;
using Weight = std::vector<Rational>;

/// e^{jk}; j>k gives -e^{kj}, j==k gives 0.
LieElt e_elt(int j, int k, const Scalar& c = Scalar(1));
/// v_p ^ v_q; reversed order absorbed as a sign, p==q gives 0.
LieElt v_elt(int p, int q, const Scalar& c = Scalar(1));

/// Family of a nonzero element; throws on mixed families, nullopt for zero.
std::optional<Family> family_of(const LieElt& x);

std::string to_string(const LieElt& x);
std::string to_string(const Weight& w);

enum class RootKind { Lowering, Cartan, Raising };

struct RootSystem {
    int N = 0;
    bool odd = false;
    std::vector<Weight> roots;     // all of Phi
    std::vector<Weight> positive;  // Phi^+
    std::vector<Weight> simple;    // Delta
    std::vector<LieLabel> raising, lowering, cartan;
};

/// so(n+1) for the simple n-Lie algebra of arity n.
class SoAlgebra {
public:
    explicit SoAlgebra(int n);

    int n() const { return n_; }
    int m() const { return n_ + 1; }
    int N() const { return m() / 2; }
    bool odd() const { return m() % 2 == 1; }
    int dim() const { return m() * (m() - 1) / 2; }

    const std::vector<LieLabel>& labels(Family f) const { return f == Family::E ? e_labels_ : v_labels_; }
    std::size_t index(const LieLabel& l) const;

    /// Bracket of two basis labels of one family.
    const LieElt& bracket(const LieLabel& x, const LieLabel& y) const;
    /// Bilinear commutator; throws on mixed families.
    LieElt commutator(const LieElt& x, const LieElt& y) const;

    LieElt to_v_basis(const LieElt& x) const;
    LieElt from_v_basis(const LieElt& x) const;
    const LieElt& to_v_basis(const LieLabel& l) const;
    const LieElt& from_v_basis(const LieLabel& l) const;

    /// Matrix in the defining (n+1)-dimensional representation.
    ExactMatrix matrix_of(const LieElt& x) const;

    /// epsilon_j = i e^{2j-1,2j} in the V family.
    LieElt epsilon(int j) const;
    Weight weight_of(const LieLabel& l) const;
    RootKind kind(const LieLabel& l) const;
    const RootSystem& root_system() const { return roots_; }

    /// Coordinates of v_p (p in -N..N) in the standard basis e_1..e_{n+1}.
    std::vector<Scalar> v_vector(int p) const;

private:
    void check_label(const LieLabel& l) const;

    int n_;
    std::vector<LieLabel> e_labels_, v_labels_;
    std::map<LieLabel, std::size_t> index_;
    std::vector<LieElt> e_table_, v_table_;
    std::vector<LieElt> to_v_, from_v_;
    RootSystem roots_;
};

RootSystem root_system(int n);
Weight weight_of(const SoAlgebra& alg, const LieLabel& l);

}  // namespace nlie
