#ifndef VEXLP_EXPONENT_HPP
#define VEXLP_EXPONENT_HPP

#include <optional>
#include <vector>

#include "vexlp/common.hpp"
#include "vexlp/intervals.hpp"

namespace vexlp {

// Partition of the line by the value of the exponent:
//   omega_1 = {p = 1}, omega_star = {1 < p < inf}, omega_inf = {p = inf},
// computed symbolically from the piece forms (never by comparing floats).
// Isolated blow-up points inside a piece (e.g. the origin of a power-decay
// piece) are null sets and are left inside omega_star's interval hull.
struct PartitionSets {
  IntervalSet omega_1;
  IntervalSet omega_star;
  IntervalSet omega_inf;
};

struct Lh1Witness {
  double kappa;  // 1/(p(x)-1) >= kappa*log|x| for a.e. |x| > m
  double m;
};

// Piecewise-analytic exponent function p: R -> [1, inf].
//
// Forms:
//   Constant(c)        p(x) = c, c in [1, inf]
//   LogDecay(kappa)    p(x) = 1 + 1/(kappa*log(e+|x|))
//   PowerDecay(c0, k)  p(x) = 1 + |x|^{-k}/c0   (p(0) = inf, a null point)
//   Affine(m, b)       p(x) = clamp(m*x + b, 1, inf)
//
// Each piece may additionally be marked conjugated, in which case it
// evaluates to the pointwise Hoelder dual of its base form; this keeps the
// class closed under conjugation and makes conjugate(conjugate(p)) an exact
// involution.
class ExponentFunction {
public:
  enum class Form { Constant, LogDecay, PowerDecay, Affine };

  struct Piece {
    Interval domain;
    Form form = Form::Constant;
    double c = 2;                      // Constant
    double kappa = 1;                  // LogDecay
    double c0 = 1, k = 1;              // PowerDecay
    double slope = 0, intercept = 2;   // Affine
    bool conjugated = false;

    double base_value(double x) const;
    double value(double x) const;
  };

  explicit ExponentFunction(std::vector<Piece> pieces);

  static ExponentFunction constant(double c);
  static ExponentFunction log_decay(double kappa);
  static ExponentFunction power_decay(double c0, double k);

  double operator()(double x) const;
  const std::vector<Piece>& pieces() const { return pieces_; }

  double p_minus() const { return p_minus_; }
  double p_plus() const { return p_plus_; }

  // Essential infimum of p restricted to {|x| > t}; used by tail bounds.
  double tail_p_minus(double t) const;
  // Essential supremum of p restricted to {|x| <= t} minus omega_inf.
  double finite_region_p_plus(double t) const;

  // Piece boundaries plus interior singular points (quadrature pre-splits).
  std::vector<double> breakpoints() const;

  bool all_constant() const;

private:
  std::vector<Piece> pieces_;
  double p_minus_ = 1;
  double p_plus_ = 1;
};

// Pointwise Hoelder dual value with the conventions 1' = inf, inf' = 1.
double conjugate_value(double p);

ExponentFunction conjugate(const ExponentFunction& p);
PartitionSets partition(const ExponentFunction& p);

// K_{p} = (1/p_- - 1/p_+ + 1) delta(omega_star) + delta(omega_inf) + delta(omega_1).
double holder_constant(const ExponentFunction& p);

std::pair<double, double> essential_bounds(const ExponentFunction& p);

// Witnesses (kappa, M) for the tail criterion 1/(p(x)-1) >= kappa*log|x|,
// present exactly when 1/p has the logarithmic decay property at infinity
// with limit exponent 1.
std::optional<Lh1Witness> check_lh1(const ExponentFunction& p);

// Per-piece essential range of p over the given interval [min, max].
std::pair<double, double> piece_bounds(const ExponentFunction::Piece& piece);

}  // namespace vexlp

#endif
