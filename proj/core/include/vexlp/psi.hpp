#ifndef VEXLP_PSI_HPP
#define VEXLP_PSI_HPP

#include <span>
#include <string>
#include <vector>

#include "vexlp/common.hpp"
#include "vexlp/exponent.hpp"
#include "vexlp/funcspace.hpp"

namespace vexlp {

// u_s(t) = (1 - e^{-ist}) / (it), with u_s(0) = s and a 4-term series for
// |st| < 1e-4 (the closed form loses all precision to cancellation there).
// Satisfies |u_s(t)| <= min(|s|, 2/|t|).
cplx u_kernel(double s, double t);

// Psi_f(s) = \int u_s(t) f(t) dt over the line; Psi_f(0) = 0 exactly.
// Panels are pre-split to the oscillation period 2pi/|s| and the tail is
// truncated via the integrand envelope min(|s|, 2/|t|) |f(t)|.
cplx psi(const CatalogFunction& f, double s, double tol = 1e-9);

struct PsiEvaluation {
  std::vector<double> s_grid;
  std::vector<cplx> values;
  std::vector<double> errors;
};

PsiEvaluation psi_grid(const CatalogFunction& f, const std::vector<double>& s_grid,
                       double tol = 1e-9);

// C_q = 4^{1/q} (\int_0^inf |sin y / y|^q dy)^{1/q} for q in (1, inf),
// C_inf = 1. The slowly convergent tail (q near 1) is summed per period
// with an Euler-Maclaurin closed form, so accuracy is uniform in q.
double c_q(double q, double tol = 1e-10);

enum class BoundRegime { FinitePPlus, PMinusGt1, Lh1, PowerDecayExample };

const char* regime_name(BoundRegime r);
BoundRegime regime_from_name(const std::string& name);

// Growth-bound data derived from the exponent alone. The certified bound is
//   |Psi_f(s)| <= f_norm * max(coeff_small |s|^{e_small},
//                              coeff_large |s|^{e_large}),
// and `crossover` is the |s| where the branches swap (used downstream by the
// exchange inequality constants).
struct BoundContext {
  BoundRegime regime;
  double k_p = 1;
  double p_minus = 1, p_plus = 1;
  double q_minus = 1, q_plus = 1;
  double c_qminus = 0;      // only for the finite-exponent regimes
  double lh1_c = 0;         // log-decay constant C (= 1/kappa)
  double coeff_small = 1, e_small = 1;
  double coeff_large = 1, e_large = 1;
  double crossover = 1;
};

// Validates the regime's hypotheses on p (throwing a precondition_error that
// names the failed hypothesis) and assembles the bound constants.
BoundContext make_bound_context(const ExponentFunction& p, BoundRegime regime);

double bound_rhs(const BoundContext& ctx, double f_norm, double s);
double bound_rhs(const ExponentFunction& p, double f_norm, double s,
                 BoundRegime regime);

struct BoundCertificate {
  BoundRegime regime;
  double f_norm = 0;
  struct Row {
    double s, lhs, rhs, margin;
  };
  std::vector<Row> rows;
  double min_margin = 0;
  bool pass = false;
};

BoundCertificate certify_bounds(const CatalogFunction& f,
                                const ExponentFunction& p,
                                const std::vector<double>& s_grid,
                                BoundRegime regime, double tol = 1e-8);

struct HolderExponentEstimate {
  double alpha_hat = 0;
  bool conclusive = false;
};

// Least-squares slope of log|Psi_f(s0+h) - Psi_f(s0)| against log h.
HolderExponentEstimate holder_exponent_estimate(const CatalogFunction& f,
                                                double s0,
                                                const std::vector<double>& h_grid,
                                                double tol = 1e-10);

// Slope of the least-squares line through (log x_i, log y_i).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace vexlp

#endif
