#include "vexlp/special.hpp"

#include <cmath>

namespace vexlp {

double lambert_w(double x) {
  if (!(x > 0)) throw precondition_error("lambert_w: requires x > 0");
  // Halley iteration from w0 = log(1 + x); monotone convergence on (0, inf).
  double w = std::log1p(x);
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-13 * x) break;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    w -= f / denom;
  }
  const double residual = std::abs(w * std::exp(w) - x);
  if (residual > 1e-12 * x)
    throw numeric_error("lambert_w: iteration failed to converge");
  return w;
}

double gamma_positive(double x) {
  if (!(x > 0)) throw precondition_error("gamma_positive: requires x > 0");
  return std::tgamma(x);
}

}  // namespace vexlp
