#ifndef VEXLP_DECAY_HPP
#define VEXLP_DECAY_HPP

#include <vector>

#include "vexlp/common.hpp"

namespace vexlp {

// A certified pointwise envelope valid for |x| >= threshold. Tail truncation
// throughout the library is driven by these: every improper integral picks
// its cutoff T so that the analytic remainder bound drops below tolerance.
struct TailPart {
  enum class Kind { Compact, Gauss, ExpAbs, Power };

  Kind kind = Kind::Compact;
  double amp = 0;       // A
  double rate = 0;      // gauss: A e^{-rate x^2}; expabs: A e^{-rate |x|}
  double alpha = 0;     // power: A |x|^{-alpha}
  double threshold = 0; // envelope valid for |x| >= threshold

  static TailPart compact(double support_radius) {
    return {Kind::Compact, 0, 0, 0, support_radius};
  }
  static TailPart gauss(double amp, double rate, double threshold = 0) {
    return {Kind::Gauss, amp, rate, 0, threshold};
  }
  static TailPart exp_abs(double amp, double rate, double threshold = 0) {
    return {Kind::ExpAbs, amp, rate, 0, threshold};
  }
  static TailPart power(double amp, double alpha, double threshold = 1) {
    return {Kind::Power, amp, 0, alpha, threshold};
  }

  double sup_beyond(double t) const;
  // bound on \int_{|x|>T} envelope(x)^p |x|^w dx, p >= ... any p > 0, w >= 0.
  // Returns +inf when the bound diverges.
  double tail_integral(double t, double p = 1.0, double weight_pow = 0.0) const;
};

// Sum-of-parts envelope: |f(x)| <= sum_i part_i(x) for |x| >= threshold().
class DecayProfile {
public:
  DecayProfile() = default;
  explicit DecayProfile(std::vector<TailPart> parts) : parts_(std::move(parts)) {}

  static DecayProfile compact(double radius) {
    return DecayProfile({TailPart::compact(radius)});
  }

  const std::vector<TailPart>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  double threshold() const;

  double sup_beyond(double t) const;
  double tail_integral(double t, double weight_pow = 0.0) const;
  // bound on \int_{|x|>T} |f|^p using (sum a_i)^p <= n^{p-1} sum a_i^p.
  double tail_integral_pow(double t, double p) const;

  DecayProfile scaled(double factor) const;
  DecayProfile combined(const DecayProfile& other) const;

  // Coarse classification used in reports: the weakest member wins.
  enum class Class { Compact, Exponential, Power, Unknown };
  Class classify() const;
  // For Class::Power, the slowest decay exponent present.
  double weakest_power_alpha() const;

private:
  std::vector<TailPart> parts_;
};

}  // namespace vexlp

#endif
