#ifndef VEXLP_BV_HPP
#define VEXLP_BV_HPP

#include <functional>
#include <optional>
#include <vector>

#include "vexlp/common.hpp"
#include "vexlp/decay.hpp"
#include "vexlp/funcspace.hpp"
#include "vexlp/intervals.hpp"

namespace vexlp {

// Real function of bounded variation: finitely many C1 pieces plus finitely
// many jumps. The variation measure decomposes as dg = g' dt + sum jump_j
// delta_{x_j}, and values follow the right-continuity convention at jumps.
class BVFunction {
public:
  struct Piece {
    Interval domain;
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;  // may be empty when never needed
    std::vector<double> critical_points;   // candidate extrema of deriv sign
    DecayProfile value_tail;               // envelopes for unbounded pieces
    DecayProfile deriv_tail;
    DecayProfile deriv2_tail;
  };
  struct Jump {
    double x;
    double height;  // g(x+) - g(x-)
  };

  BVFunction() = default;
  BVFunction(std::vector<Piece> pieces, std::vector<Jump> jumps,
             double limit_neg, double limit_pos);

  double operator()(double x) const;
  double deriv_at(double x) const;
  bool has_deriv2() const;
  double deriv2_at(double x) const;

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  double limit_neg() const { return limit_neg_; }
  double limit_pos() const { return limit_pos_; }

  DecayProfile value_tail() const;
  DecayProfile deriv_tail() const;
  DecayProfile deriv2_tail() const;

  // Envelope |g(x)| <= amp * x^{-alpha} for 0 < x < threshold; present for
  // weights with an origin singularity (half-line integrals).
  std::optional<TailPart> zero_singularity;
  std::optional<TailPart> zero_singularity_deriv;

  // Original catalog function when this weight was derived from one
  // (enables closed-form transforms downstream).
  std::optional<CatalogFunction> catalog;

  // Builders ------------------------------------------------------------

  // Re f as a BV function; requires every term to be real-valued
  // (imaginary coefficients are rejected by a sample check).
  static BVFunction from_catalog(const CatalogFunction& f);
  static BVFunction constant(double v);
  // 0 for x < x0, h for x >= x0.
  static BVFunction step(double x0, double h);
  // 0 for t < a, t^n on [a, b), frozen at b^n beyond.
  static BVFunction monomial_window(int n, double a, double b);
  // x^{-alpha} on (0, a], frozen at a^{-alpha} beyond a, 0 for x <= 0.
  static BVFunction power_singularity(double alpha, double a);

  BVFunction operator+(const BVFunction& other) const;
  BVFunction scaled(double c) const;

private:
  std::vector<Piece> pieces_;
  std::vector<Jump> jumps_;
  double limit_neg_ = 0, limit_pos_ = 0;
};

// V g = sum of \int |g'| over pieces plus sum of |jump| heights.
double total_variation(const BVFunction& g, double tol = 1e-9);

// Pointwise convolution (f * g)(x) = \int f(t) g(x - t) dt by quadrature.
// Both factors must be integrable (power tails need alpha > 1).
cplx convolve_at(const CatalogFunction& f, const CatalogFunction& g, double x,
                 double tol = 1e-9);
cplx convolve_at(const BVFunction& f, const CatalogFunction& g, double x,
                 double tol = 1e-9);

SampledFunction convolve(const CatalogFunction& f, const CatalogFunction& g,
                         const std::vector<double>& grid, double tol = 1e-9);

}  // namespace vexlp

#endif
