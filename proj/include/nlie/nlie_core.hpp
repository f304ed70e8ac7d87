#pragma once

#include "nlie/report.hpp"
#include "nlie/so_basis.hpp"
#include "nlie/wedge.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nlie {

/// [x_1, ..., x_n] = *(x_1 ^ ... ^ x_n) on C^{n+1}.
WedgeElt n_bracket(const std::vector<WedgeElt>& args, int n);

/// Derivation extension of ad(a), ad(a)(b) = [a_1, ..., a_{n-1}, b].
WedgeElt ad_tilde(const WedgeElt& a, const WedgeElt& target);

/// [a, b] = (ad~(a)(b) - ad~(b)(a)) / 2 on the (n-1)-th exterior power.
WedgeElt basic_bracket(const WedgeElt& a, const WedgeElt& b);

/// The element of so(n+1), E family, whose matrix is ad(a) on C^{n+1}.
LieElt hodge_transport(const WedgeElt& a);

/// Inverse of hodge_transport.
WedgeElt hodge_transport_inverse(const LieElt& x, int n);

/// Random grade-k element with integer coefficients in [-3, 3].
WedgeElt random_wedge(int dim, int grade, std::mt19937_64& rng, double density = 0.5);

Report check_generalized_jacobi(int n, int trials, std::uint64_t seed);
/// Exhaustive over strictly increasing basis tuples in both bracket slots.
Report check_generalized_jacobi_basis(int n);
Report check_ad_homomorphism(int n, int trials, std::uint64_t seed);

}  // namespace nlie
