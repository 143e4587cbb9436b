#include "vexlp/decay.hpp"

#include <algorithm>
#include <cmath>

namespace vexlp {

double TailPart::sup_beyond(double t) const {
  t = std::max(t, threshold);
  switch (kind) {
    case Kind::Compact:
      return t >= threshold ? 0.0 : kInf;
    case Kind::Gauss:
      return amp * std::exp(-rate * t * t);
    case Kind::ExpAbs:
      return amp * std::exp(-rate * t);
    case Kind::Power:
      return t > 0 ? amp * std::pow(t, -alpha) : kInf;
  }
  return kInf;
}

double TailPart::tail_integral(double t, double p, double weight_pow) const {
  t = std::max(t, std::max(threshold, 1e-300));
  const double w = weight_pow;
  switch (kind) {
    case Kind::Compact:
      return 0.0;
    case Kind::Gauss: {
      // \int_T^inf x^w (A e^{-r x^2})^p dx <= T^{w-1} A^p e^{-prT^2}/(2pr)
      // using x^w <= T^{w-1} x for w <= 1, and x^w <= x^{ceil(w)} ... we only
      // ever need w in [0, 2]; handle w <= 1 sharply and w in (1,2] by one
      // extra factor of T.
      const double pr = p * rate;
      double base = std::pow(amp, p) * std::exp(-pr * t * t) / (2 * pr);
      double wfac;
      if (w <= 1.0)
        wfac = std::pow(t, w - 1.0);
      else
        wfac = std::pow(t, w - 1.0) * (1.0 + 1.0 / (pr * t * t));
      return 2.0 * base * wfac;  // both tails
    }
    case Kind::ExpAbs: {
      // \int_T^inf x^w (A e^{-r x})^p dx, w <= 1: <= T^w A^p e^{-prT}/(pr) (1 + w/(prT))
      const double pr = p * rate;
      double base = std::pow(amp, p) * std::exp(-pr * t) / pr;
      double wfac = std::pow(t, w) * (1.0 + (w > 0 ? w / (pr * t) : 0.0));
      return 2.0 * base * wfac;
    }
    case Kind::Power: {
      const double expo = p * alpha - w;  // integrand ~ x^{-expo}
      if (expo <= 1.0) return kInf;
      return 2.0 * std::pow(amp, p) * std::pow(t, 1.0 - expo) / (expo - 1.0);
    }
  }
  return kInf;
}

double DecayProfile::threshold() const {
  double t = 0;
  for (const auto& p : parts_) t = std::max(t, p.threshold);
  return t;
}

double DecayProfile::sup_beyond(double t) const {
  double s = 0;
  for (const auto& p : parts_) s += p.sup_beyond(t);
  return s;
}

double DecayProfile::tail_integral(double t, double weight_pow) const {
  double s = 0;
  for (const auto& p : parts_) s += p.tail_integral(t, 1.0, weight_pow);
  return s;
}

double DecayProfile::tail_integral_pow(double t, double p) const {
  if (parts_.empty()) return kInf;
  const double n = static_cast<double>(parts_.size());
  double s = 0;
  for (const auto& part : parts_) s += part.tail_integral(t, p, 0.0);
  return std::pow(n, p - 1.0) * s;
}

DecayProfile DecayProfile::scaled(double factor) const {
  std::vector<TailPart> out = parts_;
  for (auto& p : out) p.amp *= std::abs(factor);
  return DecayProfile(std::move(out));
}

DecayProfile DecayProfile::combined(const DecayProfile& other) const {
  std::vector<TailPart> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  return DecayProfile(std::move(out));
}

DecayProfile::Class DecayProfile::classify() const {
  if (parts_.empty()) return Class::Unknown;
  bool has_power = false, has_exp = false;
  for (const auto& p : parts_) {
    if (p.kind == TailPart::Kind::Power && p.amp != 0) has_power = true;
    if ((p.kind == TailPart::Kind::Gauss || p.kind == TailPart::Kind::ExpAbs) &&
        p.amp != 0)
      has_exp = true;
  }
  if (has_power) return Class::Power;
  if (has_exp) return Class::Exponential;
  return Class::Compact;
}

double DecayProfile::weakest_power_alpha() const {
  double a = kInf;
  for (const auto& p : parts_)
    if (p.kind == TailPart::Kind::Power && p.amp != 0) a = std::min(a, p.alpha);
  return a;
}

}  // namespace vexlp
