#ifndef VEXLP_FUNCSPACE_HPP
#define VEXLP_FUNCSPACE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "vexlp/common.hpp"
#include "vexlp/decay.hpp"

namespace vexlp {

// Primitive shapes. Every primitive carries a modulation frequency so the
// catalog stays closed under x -> e^{iax} f(x).

struct GaussianPrim {
  double a = 1;       // e^{-a (x-center)^2}
  double center = 0;
  double freq = 0;    // times e^{i freq x}
};

// P(x-center) e^{-a (x-center)^2} e^{i freq x}, complex coefficients
// ordered by ascending degree.
struct PolyGaussianPrim {
  std::vector<cplx> coeffs;
  double a = 1;
  double center = 0;
  double freq = 0;
};

struct IndicatorPrim {
  double lo = 0, hi = 1;
  double freq = 0;
};

// Piecewise-linear bump: 0 at lo, 1 at the midpoint, 0 at hi.
struct HatPrim {
  double lo = -1, hi = 1;
  double freq = 0;
};

// (side*(x-origin))^{-alpha} on side*(x-origin) > cutoff, zero elsewhere.
struct PowerTailPrim {
  double alpha = 2;
  double cutoff = 1;
  double origin = 0;
  int side = +1;
  double freq = 0;
};

using Primitive = std::variant<GaussianPrim, PolyGaussianPrim, IndicatorPrim,
                               HatPrim, PowerTailPrim>;

// Finite linear combination of primitives with complex coefficients.
// Values are exact closed forms; decay envelopes are certified bounds used
// for tail truncation everywhere else in the library.
class CatalogFunction {
public:
  struct Term {
    cplx coeff{1.0, 0.0};
    Primitive prim;
  };

  CatalogFunction() = default;  // the zero function
  explicit CatalogFunction(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static CatalogFunction gaussian(double a, double center = 0, double freq = 0);
  static CatalogFunction poly_gaussian(std::vector<cplx> coeffs, double a,
                                       double center = 0, double freq = 0);
  static CatalogFunction indicator(double lo, double hi);
  static CatalogFunction hat(double lo, double hi);
  static CatalogFunction power_tail(double alpha, double cutoff = 1);

  cplx operator()(double x) const;
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Structural transforms; the catalog is closed under all four.
  CatalogFunction translated(double a) const;  // x -> f(x - a)
  CatalogFunction modulated(double a) const;   // x -> e^{iax} f(x)
  CatalogFunction reflected() const;           // x -> f(-x)
  CatalogFunction dilated(double a, double b) const;  // x -> f(ax + b), a != 0

  CatalogFunction scaled(cplx c) const;
  friend CatalogFunction operator+(const CatalogFunction& f,
                                   const CatalogFunction& g);
  friend CatalogFunction operator-(const CatalogFunction& f,
                                   const CatalogFunction& g);

  DecayProfile decay() const;
  DecayProfile derivative_decay() const;
  // Support edges and kinks (quadrature pre-split points).
  std::vector<double> breakpoints() const;
  // Candidate |f| maximizers (exact peaks of single primitives).
  std::vector<double> peak_candidates() const;

  // Pointwise derivative away from breakpoints (defined a.e.).
  cplx derivative_at(double x) const;
  cplx second_derivative_at(double x) const;
  DecayProfile second_derivative_decay() const;
  // Closed-form derivative as a catalog member. Present for terms whose
  // a.e. derivative stays in the catalog (gaussian, poly-gaussian, hat);
  // absent when a term would differentiate to a point mass.
  std::optional<CatalogFunction> derivative() const;

  // Jump of Re f at x (nonzero only at indicator / power-tail edges).
  double jump_at(double x) const;

  bool is_l1() const;
  // Certified bound on \int |f| (inf when a power tail has alpha <= 1).
  double l1_norm_bound(double tol = 1e-8) const;
  // Analytic bound on sup |f|.
  double sup_bound() const;

private:
  std::vector<Term> terms_;
};

// Gaussian-class test function with closed-form derivative and closed-form
// classical Fourier transform. Used as the pairing test set.
class SchwartzFunction {
public:
  explicit SchwartzFunction(CatalogFunction f);
  static SchwartzFunction gaussian(double a, double center = 0, double freq = 0);
  static SchwartzFunction poly_gaussian(std::vector<cplx> coeffs, double a,
                                        double center = 0, double freq = 0);

  cplx operator()(double x) const { return f_(x); }
  const CatalogFunction& function() const { return f_; }
  const CatalogFunction& derivative() const { return df_; }
  // Classical transform \int e^{-isx} phi(x) dx, closed form (again a
  // poly-gaussian, so it can be differentiated and paired further).
  const CatalogFunction& transform() const { return ft_; }

private:
  CatalogFunction f_, df_, ft_;
};

// Closed-form classical transform of a single term, when one exists
// (gaussian / poly-gaussian / indicator / hat).
std::optional<cplx> classical_ft_closed_form(const CatalogFunction& f, double s);

// Sampled data import: piecewise-linear interpolant through (x, value)
// pairs with a caller-declared (trusted) decay envelope outside the sample
// window.
struct SampledFunction {
  std::vector<double> x;
  std::vector<cplx> value;
  DecayProfile decay;

  cplx operator()(double t) const;
};

}  // namespace vexlp

#endif
