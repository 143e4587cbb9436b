#ifndef VEXLP_SPECIAL_HPP
#define VEXLP_SPECIAL_HPP

#include "vexlp/common.hpp"

namespace vexlp {

inline cplx cis(double x) { return cplx(std::cos(x), std::sin(x)); }

inline double sinc(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

// Main real branch of the Lambert W function on (0, inf):
// the unique w > 0 with w e^w = x. Residual |w e^w - x| <= 1e-12 x.
double lambert_w(double x);

// Gamma function on (0, inf).
double gamma_positive(double x);

}  // namespace vexlp

#endif
