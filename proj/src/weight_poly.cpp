#include "nlie/weight_poly.hpp"

namespace nlie {

std::string coefficient_str(const Scalar& c) {
    int nonzero = 0;
    for (int k = 0; k < 4; ++k) nonzero += sgn(c.component(k)) != 0;
    if (nonzero > 1) return "(" + c.str() + ")";
    return c.str();
}

}  // namespace nlie
