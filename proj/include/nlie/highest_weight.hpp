#pragma once

#include "nlie/report.hpp"
#include "nlie/uea.hpp"
#include "nlie/weight_poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace nlie {

/// v_{a,b,c,d}(alpha,beta,gamma,delta): the image of v_{alpha a} ^ v_{beta b} ^ v_{gamma c} ^ v_{delta d}
/// under psi, lifted to U. Index 0 stands for v_0 (odd n+1 only) and carries sign +1.
struct VGenerator {
    std::array<int, 4> index{};  // a <= b <= c <= d in 0..N
    std::array<int, 4> sign{};   // +1 or -1
    UElt elt;                    // V family, PBW normal form

    int signed_index(int k) const { return sign[k] * index[k]; }
    std::string str() const;
};

/// alpha eps_a + beta eps_b + gamma eps_c + delta eps_d.
Weight weight_of(const VGenerator& g, int N);

/// The symmetric tensor v_i^v_j (.) v_k^v_l - v_i^v_k (.) v_j^v_l + v_i^v_l (.) v_j^v_k for signed indices.
SymElt v_generator_sym(int i, int j, int k, int l);
/// One generator per 4-subset of signed indices; these form a basis of R in the V family.
std::vector<VGenerator> v_generators(int n);
/// v_{a,a,c,c}(1,-1,1,-1) for 1 <= a < c <= N.
std::vector<VGenerator> weight_zero_generators(int n);

/// Polynomial ring in lambda_1..lambda_N.
WeightPoly lambda_var(int N, int j);

/// pr_lambda(u . 1) as a polynomial in lambda_1..lambda_N. E-family input is converted first.
WeightPoly hw_action(const SoAlgebra& alg, const UElt& u);

/// Monic images of the weight-zero generators, sorted.
std::vector<WeightPoly> classification_polynomials(int n);
/// lambda_c (lambda_a + 1) for 1 <= a < c <= N, monic and sorted.
std::vector<WeightPoly> expected_classification_polynomials(int n);

/// lambda_1 = ... = lambda_{t-1} = -1, lambda_t = x, the rest 0.
struct WeightFamily {
    int t = 1;
    int N = 1;
    /// Coordinates as polynomials in the single variable x.
    std::vector<WeightPoly> coordinates() const;
    std::vector<Scalar> at(const Scalar& x) const;
    bool contains(const std::vector<Scalar>& lambda) const;
    std::string str() const;
};

struct ClassificationResult {
    std::vector<WeightFamily> families;
    bool factors_ok = false;          // each polynomial is lambda_c (lambda_a + 1) up to a scalar
    int patterns_consistent = 0;      // case tree over {-1, 0, other}^N
    int patterns_uncovered = 0;       // consistent patterns outside every family
    int grid_solutions = 0;           // on {-2..2}^N
    int grid_outside_families = 0;
    int family_points_failing = 0;    // family specializations that miss the system
};

ClassificationResult solve_classification(int n);

/// Coefficients of pi_1..pi_N as polynomials in x.
using PiExpression = std::vector<WeightPoly>;

/// The expression printed in the main theorems for family t (N = 2 uses the t = N-1 row for t = 1).
PiExpression theorem_pi_expression(int t, int n);
/// Epsilon coordinates of sum_k c_k pi_k with the standard B/D conventions.
std::vector<WeightPoly> pi_to_epsilon(const PiExpression& pi, int n);
/// Inverse of pi_to_epsilon: c_k = <lambda, alpha_k^vee>.
PiExpression epsilon_to_pi(const std::vector<WeightPoly>& eps, int n);
std::string to_string(const PiExpression& pi);

Report check_classification_polynomials(int n);
Report check_fundamental_weights(int n);

/// so(4) = sl(2) + sl(2) route for n = 3.
Report so4_route_check();

/// Q(A) inside the Joseph ideal; requires n > 4.
Report joseph_check(int n);

}  // namespace nlie
