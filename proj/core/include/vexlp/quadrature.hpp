#ifndef VEXLP_QUADRATURE_HPP
#define VEXLP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "vexlp/common.hpp"
#include "vexlp/decay.hpp"

namespace vexlp {

class BVFunction;

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double error_estimate = 0;
  long evaluations = 0;
  bool converged = true;
  // For failed improper integrals: the truncation radius that would have
  // been required (best known lower bound).
  double required_radius = 0;

  double real() const { return value.real(); }
};

struct Integrand {
  std::function<cplx(double)> f;
  // Known kinks / support edges: panels never straddle these.
  std::vector<double> breakpoints{};
  // Dominant oscillation frequency (rad per unit); panels are pre-split to
  // about one period so the nested rule never aliases.
  double osc_freq = 0;
};

inline Integrand real_integrand(std::function<double(double)> f,
                                std::vector<double> breakpoints = {},
                                double osc_freq = 0) {
  return Integrand{[g = std::move(f)](double x) { return cplx(g(x), 0.0); },
                   std::move(breakpoints), osc_freq};
}

struct QuadratureOptions {
  std::size_t max_panels = 250000;
  double min_width_factor = 1e-14;  // relative to interval scale
};

// Adaptive Gauss-Kronrod 7/15 over a finite interval.
// On success |value - integral| <= error_estimate <= tol for piecewise-smooth
// integrands with declared breakpoints; on budget exhaustion the result
// carries converged = false and the best available estimate.
QuadratureResult integrate(const Integrand& h, double a, double b, double tol,
                           const QuadratureOptions& opt = {});

// One-sided improper integral over [a, inf). `tail_bound(T)` must bound
// |\int_T^inf h| and tend to 0; the radius is grown until the bound is
// below tol/2 and the interior handled by `integrate` at tol/2.
QuadratureResult integrate_upper(const Integrand& h, double a,
                                 const std::function<double(double)>& tail_bound,
                                 double tol, double t0 = 16,
                                 const QuadratureOptions& opt = {});

// Two-sided improper integral over the whole line; `tail_bound(T)` bounds
// |\int_{|t|>T} h|.
QuadratureResult integrate_improper(const Integrand& h,
                                    const std::function<double(double)>& tail_bound,
                                    double tol, double t0 = 16,
                                    const QuadratureOptions& opt = {});

// Convenience: tail bound from a decay profile for a plain \int f.
QuadratureResult integrate_improper(const Integrand& h, const DecayProfile& decay,
                                    double tol,
                                    const QuadratureOptions& opt = {});

// Riemann-Stieltjes integral \int_a^b F dg for continuous F against a
// piecewise-C1-plus-jumps weight:
//   \int_a^b F g' dt  +  sum_{x_j in (a, b]} F(x_j) jump_j.
// Jumps follow the right-continuity convention (a jump exactly at `a` does
// not count, a jump at `b` does).
QuadratureResult stieltjes(const std::function<cplx(double)>& f,
                           const BVFunction& g, double a, double b, double tol);

}  // namespace vexlp

#endif
