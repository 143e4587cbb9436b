#include "vexlp/intervals.hpp"

#include <algorithm>
#include <cmath>

namespace vexlp {

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
  normalize();
}

void IntervalSet::normalize() {
  std::erase_if(parts_, [](const Interval& iv) { return iv.empty(); });
  std::sort(parts_.begin(), parts_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const Interval& iv : parts_) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  parts_ = std::move(merged);
}

double IntervalSet::measure() const {
  double total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

bool IntervalSet::contains(double x) const {
  for (const Interval& iv : parts_)
    if (iv.contains(x)) return true;
  return false;
}

IntervalSet IntervalSet::intersect(const Interval& window) const {
  std::vector<Interval> out;
  for (const Interval& iv : parts_) {
    Interval clipped{std::max(iv.lo, window.lo), std::min(iv.hi, window.hi)};
    if (!clipped.empty()) out.push_back(clipped);
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& w : other.parts_) {
    IntervalSet piece = intersect(w);
    out.insert(out.end(), piece.parts_.begin(), piece.parts_.end());
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement_in(const Interval& window) const {
  std::vector<Interval> out;
  double cursor = window.lo;
  for (const Interval& iv : intersect(window).parts_) {
    if (iv.lo > cursor) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < window.hi) out.push_back({cursor, window.hi});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(out));
}

void IntervalSet::add(const Interval& iv) {
  parts_.push_back(iv);
  normalize();
}

int delta_indicator(const IntervalSet& e) { return e.measure() > 0 ? 1 : 0; }

}  // namespace vexlp
