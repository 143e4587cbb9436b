#ifndef VEXLP_TESTS_ORACLE_HPP
#define VEXLP_TESTS_ORACLE_HPP

// Test-side oracles, deliberately independent of the library's quadrature
// path: composite Simpson with interval doubling, plus the handful of
// special values the tests freeze.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace oracle {

using cplx = std::complex<double>;

// Composite Simpson refined by doubling until two successive refinements
// agree to tol (absolute).
inline cplx simpson(const std::function<cplx(double)>& f, double a, double b,
                    double tol, long n0 = 64, long max_n = 1 << 24) {
  auto pass = [&](long n) {
    const double h = (b - a) / double(n);
    cplx s = f(a) + f(b);
    for (long i = 1; i < n; i += 2) s += 4.0 * f(a + i * h);
    for (long i = 2; i < n; i += 2) s += 2.0 * f(a + i * h);
    return s * (h / 3.0);
  };
  long n = n0;
  cplx prev = pass(n);
  while (n < max_n) {
    n *= 2;
    cplx cur = pass(n);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw std::runtime_error("oracle::simpson did not converge");
}

inline double simpson_real(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  return simpson([&f](double x) { return cplx(f(x), 0); }, a, b, tol).real();
}

// Si(x) = \int_0^x sin(u)/u du
inline double si(double x, double tol = 1e-11) {
  if (x == 0) return 0;
  return simpson_real(
      [](double u) { return u == 0 ? 1.0 : std::sin(u) / u; }, 0, x, tol);
}

// Cin(x) = \int_0^x (1 - cos(u))/u du
inline double cin(double x, double tol = 1e-11) {
  if (x == 0) return 0;
  return simpson_real(
      [](double u) { return u == 0 ? 0.0 : (1.0 - std::cos(u)) / u; }, 0, x, tol);
}

// Bisection root finder for continuous f with a sign change on [lo, hi].
inline double bisect_root(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-14) {
  double flo = f(lo);
  if (flo == 0) return lo;
  if (flo * f(hi) > 0) throw std::runtime_error("bisect_root: no sign change");
  while (hi - lo > tol * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if (flo * fm < 0)
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle

#endif
