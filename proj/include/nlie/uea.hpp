#pragma once

#include "nlie/linalg.hpp"
#include "nlie/report.hpp"
#include "nlie/so_basis.hpp"
#include "nlie/wedge.hpp"

#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace nlie {

/// Ordered product of basis labels; the empty monomial is 1.
using Monomial = std::vector<LieLabel>;
using UElt = LinComb<Monomial>;

/// Unordered pair {x, y} stored with x <= y: the symbol x (.) y = (x(x)y + y(x)x)/2.
using SymKey = std::pair<LieLabel, LieLabel>;
using SymElt = LinComb<SymKey>;

UElt u_one();
UElt u_mono(const Monomial& m, const Scalar& c = Scalar(1));
UElt u_of(const LieElt& x);
std::string to_string(const UElt& u);
std::string to_string(const SymElt& s);
int degree(const UElt& u);

/// Strict order on labels used for PBW normal form.
using LabelLess = std::function<bool(const LieLabel&, const LieLabel&)>;
/// Chooses which descent (position i with m[i+1] < m[i]) to rewrite next.
using DescentPicker = std::function<std::size_t(const Monomial&, const std::vector<std::size_t>&)>;

/// Rewrites xy -> yx + [x,y] at descents until every monomial is sorted.
UElt normal_order(const UElt& raw, const LabelLess& less, const SoAlgebra& alg, const DescentPicker& pick = {});

/// E family: lexicographic labels. V family: lowering < Cartan < raising, ties by label.
LabelLess pbw_order(const SoAlgebra& alg, Family f);

/// Normal form in the order pbw_order picks for the family of raw.
UElt pbw_normalize(const SoAlgebra& alg, const UElt& raw, const DescentPicker& pick = {});
UElt u_multiply(const SoAlgebra& alg, const UElt& x, const UElt& y);

/// Uniformly random descent; for confluence tests.
DescentPicker random_picker(std::mt19937_64& rng);

/// x_{i,k,l,m} = e^{ik}e^{lm} - e^{il}e^{km} + e^{im}e^{kl} for distinct indices in any order.
UElt qa_generator(int i, int k, int l, int m);
/// One generator per 4-subset i<k<l<m of {1..n+1}.
std::vector<UElt> qa_generators(int n);
/// (1/8) sum over S_4 of sgn(s) e^{a_s1 a_s2} e^{a_s3 a_s4}.
UElt qa_generator_symmetrized(int i, int k, int l, int m);

SymKey sym_key(const LieLabel& x, const LieLabel& y);
/// Bilinear x (.) y.
SymElt sym(const LieElt& x, const LieElt& y);
SymElt qa_generator_sym(int i, int k, int l, int m);
std::vector<SymElt> qa_generators_sym(int n);

/// x (.) y -> (xy + yx)/2 in normal form.
UElt lift(const SoAlgebra& alg, const SymElt& s);
/// Degree-2 part of a normal-form element, read as a symmetric tensor.
SymElt symbol2(const UElt& u);

/// g.(x (.) y) = [g,x] (.) y + x (.) [g,y].
SymElt ad_sym(const SoAlgebra& alg, const LieElt& g, const SymElt& s);
SymElt sym_to_v(const SoAlgebra& alg, const SymElt& s);
SymElt sym_from_v(const SoAlgebra& alg, const SymElt& s);

/// psi(e_i^e_j^e_k^e_l) = e^{ij}(.)e^{kl} - e^{ik}(.)e^{jl} + e^{il}(.)e^{jk}.
SymElt psi_map(const WedgeElt& w);
/// phi(e^{ab} (.) e^{cd}) = e_a^e_b^e_c^e_d.
WedgeElt phi_map(const SymElt& s, int n);

/// Natural action of g in so(n+1) on the exterior algebra of C^{n+1}.
WedgeElt act_on_wedge(const SoAlgebra& alg, const LieElt& g, const WedgeElt& w);

/// Coordinates of symmetric tensors in the basis {x (.) y : x <= y} of one family.
class SymIndexer {
public:
    SymIndexer(const SoAlgebra& alg, Family f);
    std::size_t size() const { return keys_.size(); }
    std::size_t index(const SymKey& k) const;
    const SymKey& key(std::size_t i) const { return keys_.at(i); }
    SparseVec<Scalar> coords(const SymElt& s) const;
    SymElt element(const SparseVec<Scalar>& v) const;
    const std::vector<SymKey>& keys() const { return keys_; }

private:
    const SoAlgebra* alg_;
    std::vector<SymKey> keys_;
};

/// Dynamic coordinates for UElt monomials.
class MonomialIndexer {
public:
    std::size_t index(const Monomial& m);
    SparseVec<Scalar> coords(const UElt& u);
    std::size_t size() const { return index_.size(); }

private:
    std::map<Monomial, std::size_t> index_;
};

/// dim S^2(so(n+1)) = 3C(n+1,4) + 3C(n+1,3) + C(n+1,2).
long sym2_dimension(int n);
long binomial(long a, long b);

/// Basis of Ker phi inside S^2 (E family).
std::vector<SymElt> ker_phi_basis(const SoAlgebra& alg);

Report check_R_structure(int n);

/// psi(g.w) = g.psi(w) on random pairs.
Report check_psi_equivariance(int n, int trials, std::uint64_t seed);

/// phi(psi(e_S)) = 3 e_S on every basis monomial of the fourth exterior power.
Report check_phi_psi(int n);

}  // namespace nlie
