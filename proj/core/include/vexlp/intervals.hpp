#ifndef VEXLP_INTERVALS_HPP
#define VEXLP_INTERVALS_HPP

#include <vector>

#include "vexlp/common.hpp"

namespace vexlp {

// Half-open interval [lo, hi) on the extended real line. Endpoint topology
// never matters here (only measure does), but the half-open convention keeps
// piecewise definitions unambiguous.
struct Interval {
  double lo = 0;
  double hi = 0;

  double length() const { return hi > lo ? hi - lo : 0.0; }
  bool empty() const { return !(hi > lo); }
  bool contains(double x) const { return x >= lo && x < hi; }
};

// Finite union of disjoint intervals, kept sorted.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  static IntervalSet whole_line() { return IntervalSet({{-kInf, kInf}}); }
  static IntervalSet empty_set() { return IntervalSet(); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // Total Lebesgue measure (may be +inf).
  double measure() const;
  bool contains(double x) const;

  IntervalSet intersect(const Interval& window) const;
  IntervalSet intersect(const IntervalSet& other) const;
  // Complement within `window`.
  IntervalSet complement_in(const Interval& window) const;
  IntervalSet unite(const IntervalSet& other) const;

  void add(const Interval& iv);

private:
  void normalize();
  std::vector<Interval> parts_;
};

// delta(E) = 0 if |E| = 0 and 1 otherwise.
int delta_indicator(const IntervalSet& e);

}  // namespace vexlp

#endif
