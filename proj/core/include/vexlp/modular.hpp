#ifndef VEXLP_MODULAR_HPP
#define VEXLP_MODULAR_HPP

#include <functional>
#include <string>
#include <vector>

#include "vexlp/common.hpp"
#include "vexlp/decay.hpp"
#include "vexlp/exponent.hpp"
#include "vexlp/funcspace.hpp"
#include "vexlp/intervals.hpp"

namespace vexlp {

// Generic measurable function with certified tail envelopes; everything the
// modular machinery needs to integrate |f/lambda|^{p(x)} with a provable
// truncation error. Catalog functions convert losslessly; numerically
// materialized functions (e.g. inversion differences) carry inherited
// envelopes.
struct Density {
  std::function<cplx(double)> eval;
  DecayProfile decay;
  std::vector<double> breakpoints{};
  std::vector<double> peak_candidates{};
  bool known_zero = false;
};

Density as_density(const CatalogFunction& f);

struct ModularValue {
  double lebesgue_part = 0;
  double esssup_part = 0;
  double total = 0;  // +inf when the Lebesgue part diverges
  bool converged = true;
};

struct NormResult {
  double value = 0;  // +inf when no admissible lambda was found
  double bracket_lo = 0;
  double bracket_hi = 0;
  double modular_at_value = 0;
  bool finite = true;
  std::string diagnostic{};
};

// rho_{p,region}(f / lambda): the integral of |f/lambda|^{p(x)} over the
// finite-exponent part of `region` plus the essential sup of |f/lambda| over
// region intersected with {p = inf}. Divergence is a value (+inf), not an
// error.
ModularValue modular(const Density& f, const ExponentFunction& p,
                     const IntervalSet& region, double lambda,
                     double tol = 1e-9);
ModularValue modular(const CatalogFunction& f, const ExponentFunction& p,
                     const IntervalSet& region, double lambda,
                     double tol = 1e-9);

// Luxemburg norm inf{lambda > 0 : rho(f/lambda) <= 1} by bracketing and
// bisection on lambda (rho is non-increasing in lambda). The returned value
// is the upper bracket end, so rho(f/value) <= 1 holds by construction.
// `tol` is relative on lambda.
NormResult luxemburg_norm(const Density& f, const ExponentFunction& p,
                          double tol = 1e-8);
NormResult luxemburg_norm(const CatalogFunction& f, const ExponentFunction& p,
                          double tol = 1e-8);

struct HolderReport {
  double lhs = 0;   // \int |f g|
  double rhs = 0;   // K_p ||f||_p ||g||_q
  double k = 0;
  double norm_f = 0;
  double norm_g = 0;
  bool pass = false;
  bool skipped = false;  // a norm diverged; inequality not checkable
  std::string diagnostic{};
};

HolderReport holder_check(const CatalogFunction& f, const CatalogFunction& g,
                          const ExponentFunction& p, double tol = 1e-8);

// Essential supremum of |f| over an interval union (grid + refinement with
// exact peak candidates and envelope-controlled clipping of unbounded ends).
double sup_abs(const Density& f, const IntervalSet& region);

}  // namespace vexlp

#endif
