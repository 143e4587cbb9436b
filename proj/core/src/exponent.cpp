#include "vexlp/exponent.hpp"

#include <algorithm>
#include <cmath>

namespace vexlp {

namespace {

double clamp_exponent(double v) {
  if (!(v > 1.0)) return 1.0;
  return v;
}

// Smallest |x| attained on [lo, hi), and largest (may be inf).
std::pair<double, double> abs_range(const Interval& iv) {
  if (iv.lo >= 0) return {iv.lo, iv.hi};
  if (iv.hi <= 0) return {-iv.hi, -iv.lo};
  return {0.0, std::max(-iv.lo, iv.hi)};
}

}  // namespace

double conjugate_value(double p) {
  if (p <= 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

double ExponentFunction::Piece::base_value(double x) const {
  switch (form) {
    case Form::Constant:
      return c;
    case Form::LogDecay:
      return 1.0 + 1.0 / (kappa * std::log(kEulerE + std::abs(x)));
    case Form::PowerDecay: {
      if (x == 0.0) return kInf;
      return 1.0 + std::pow(std::abs(x), -k) / c0;
    }
    case Form::Affine:
      return clamp_exponent(slope * x + intercept);
  }
  return 2.0;
}

double ExponentFunction::Piece::value(double x) const {
  double v = base_value(x);
  return conjugated ? conjugate_value(v) : v;
}

std::pair<double, double> piece_bounds(const ExponentFunction::Piece& piece) {
  auto [amin, amax] = abs_range(piece.domain);
  double lo = 1, hi = kInf;
  switch (piece.form) {
    case ExponentFunction::Form::Constant:
      lo = hi = piece.c;
      break;
    case ExponentFunction::Form::LogDecay: {
      // decreasing in |x|
      hi = 1.0 + 1.0 / (piece.kappa * std::log(kEulerE + amin));
      lo = amax == kInf
               ? 1.0
               : 1.0 + 1.0 / (piece.kappa * std::log(kEulerE + amax));
      break;
    }
    case ExponentFunction::Form::PowerDecay: {
      hi = amin == 0.0 ? kInf : 1.0 + std::pow(amin, -piece.k) / piece.c0;
      lo = amax == kInf ? 1.0 : 1.0 + std::pow(amax, -piece.k) / piece.c0;
      break;
    }
    case ExponentFunction::Form::Affine: {
      double e1 = piece.slope * piece.domain.lo + piece.intercept;
      double e2 = piece.slope * piece.domain.hi + piece.intercept;
      if (piece.slope == 0) e1 = e2 = piece.intercept;
      if (std::isnan(e1)) e1 = piece.intercept;  // 0 * inf
      if (std::isnan(e2)) e2 = piece.intercept;
      lo = clamp_exponent(std::min(e1, e2));
      hi = clamp_exponent(std::max(e1, e2));
      // Affine values are finite at every point; an unbounded sup is an
      // essential supremum of inf without the value being attained.
      break;
    }
  }
  if (piece.conjugated) return {conjugate_value(hi), conjugate_value(lo)};
  return {lo, hi};
}

ExponentFunction::ExponentFunction(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty())
    throw precondition_error("exponent: piece list must not be empty");
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) {
    return a.domain.lo < b.domain.lo;
  });
  if (pieces_.front().domain.lo != -kInf || pieces_.back().domain.hi != kInf)
    throw precondition_error("exponent: pieces must cover the whole line");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (pieces_[i].domain.hi != pieces_[i + 1].domain.lo)
      throw precondition_error("exponent: pieces must be contiguous");
  }
  for (const Piece& pc : pieces_) {
    if (pc.domain.empty())
      throw precondition_error("exponent: empty piece interval");
    switch (pc.form) {
      case Form::Constant:
        if (!(pc.c >= 1.0))
          throw precondition_error("exponent: constant value must be >= 1");
        break;
      case Form::LogDecay:
        if (!(pc.kappa > 0))
          throw precondition_error("exponent: log-decay rate must be > 0");
        break;
      case Form::PowerDecay:
        if (!(pc.c0 > 0) || !(pc.k > 0))
          throw precondition_error("exponent: power-decay parameters must be > 0");
        break;
      case Form::Affine:
        break;
    }
  }
  p_minus_ = kInf;
  p_plus_ = 1.0;
  for (const Piece& pc : pieces_) {
    auto [lo, hi] = piece_bounds(pc);
    p_minus_ = std::min(p_minus_, lo);
    p_plus_ = std::max(p_plus_, hi);
  }
}

ExponentFunction ExponentFunction::constant(double c) {
  Piece pc;
  pc.domain = {-kInf, kInf};
  pc.form = Form::Constant;
  pc.c = c;
  return ExponentFunction({pc});
}

ExponentFunction ExponentFunction::log_decay(double kappa) {
  Piece pc;
  pc.domain = {-kInf, kInf};
  pc.form = Form::LogDecay;
  pc.kappa = kappa;
  return ExponentFunction({pc});
}

ExponentFunction ExponentFunction::power_decay(double c0, double k) {
  Piece pc;
  pc.domain = {-kInf, kInf};
  pc.form = Form::PowerDecay;
  pc.c0 = c0;
  pc.k = k;
  return ExponentFunction({pc});
}

double ExponentFunction::operator()(double x) const {
  // pieces_ sorted by domain.lo; find the piece containing x.
  std::size_t lo = 0, hi = pieces_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (pieces_[mid].domain.lo <= x)
      lo = mid;
    else
      hi = mid;
  }
  return pieces_[lo].value(x);
}

double ExponentFunction::tail_p_minus(double t) const {
  double m = kInf;
  for (const Piece& pc : pieces_) {
    Interval right{std::max(pc.domain.lo, t), pc.domain.hi};
    if (!right.empty()) {
      Piece clipped = pc;
      clipped.domain = right;
      m = std::min(m, piece_bounds(clipped).first);
    }
    Interval left{pc.domain.lo, std::min(pc.domain.hi, -t)};
    if (!left.empty()) {
      Piece clipped = pc;
      clipped.domain = left;
      m = std::min(m, piece_bounds(clipped).first);
    }
  }
  return m;
}

double ExponentFunction::finite_region_p_plus(double t) const {
  double m = 1.0;
  for (const Piece& pc : pieces_) {
    if (pc.form == Form::Constant && !pc.conjugated && pc.c == kInf) continue;
    if (pc.form == Form::Constant && pc.conjugated && pc.c == 1.0) continue;
    Interval window{std::max(pc.domain.lo, -t), std::min(pc.domain.hi, t)};
    if (window.empty()) continue;
    Piece clipped = pc;
    clipped.domain = window;
    m = std::max(m, piece_bounds(clipped).second);
  }
  return m;
}

std::vector<double> ExponentFunction::breakpoints() const {
  std::vector<double> bp;
  for (const Piece& pc : pieces_) {
    if (is_finite(pc.domain.lo)) bp.push_back(pc.domain.lo);
    if (pc.form == Form::PowerDecay && pc.domain.contains(0.0))
      bp.push_back(0.0);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  return bp;
}

bool ExponentFunction::all_constant() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& pc) {
    return pc.form == Form::Constant;
  });
}

ExponentFunction conjugate(const ExponentFunction& p) {
  std::vector<ExponentFunction::Piece> out = p.pieces();
  for (auto& pc : out) pc.conjugated = !pc.conjugated;
  return ExponentFunction(std::move(out));
}

PartitionSets partition(const ExponentFunction& p) {
  PartitionSets sets;
  for (const auto& pc : p.pieces()) {
    const Interval dom = pc.domain;
    auto push = [&](IntervalSet& dst, Interval iv) {
      if (!iv.empty()) dst.add(iv);
    };
    IntervalSet* one = pc.conjugated ? &sets.omega_inf : &sets.omega_1;
    IntervalSet* inf = pc.conjugated ? &sets.omega_1 : &sets.omega_inf;
    switch (pc.form) {
      case ExponentFunction::Form::Constant:
        if (pc.c == 1.0)
          push(*one, dom);
        else if (pc.c == kInf)
          push(*inf, dom);
        else
          push(sets.omega_star, dom);
        break;
      case ExponentFunction::Form::LogDecay:
      case ExponentFunction::Form::PowerDecay:
        // strictly between 1 and inf off a null set
        push(sets.omega_star, dom);
        break;
      case ExponentFunction::Form::Affine: {
        if (pc.slope == 0) {
          if (clamp_exponent(pc.intercept) == 1.0)
            push(*one, dom);
          else
            push(sets.omega_star, dom);
          break;
        }
        // raw <= 1 on one side of xc; that side is clamped to p = 1.
        double xc = (1.0 - pc.intercept) / pc.slope;
        Interval low_side = pc.slope > 0 ? Interval{dom.lo, std::min(dom.hi, xc)}
                                         : Interval{std::max(dom.lo, xc), dom.hi};
        Interval high_side = pc.slope > 0
                                 ? Interval{std::max(dom.lo, xc), dom.hi}
                                 : Interval{dom.lo, std::min(dom.hi, xc)};
        push(*one, low_side);
        push(sets.omega_star, high_side);
        break;
      }
    }
  }
  return sets;
}

double holder_constant(const ExponentFunction& p) {
  PartitionSets sets = partition(p);
  double pm = p.p_minus(), pp = p.p_plus();
  double inv_pm = pm == kInf ? 0.0 : 1.0 / pm;
  double inv_pp = pp == kInf ? 0.0 : 1.0 / pp;
  return (inv_pm - inv_pp + 1.0) * delta_indicator(sets.omega_star) +
         delta_indicator(sets.omega_inf) + delta_indicator(sets.omega_1);
}

std::pair<double, double> essential_bounds(const ExponentFunction& p) {
  return {p.p_minus(), p.p_plus()};
}

namespace {

// Tail criterion for one unbounded piece: does 1/(p(x)-1) >= kappa*log|x|
// hold beyond some M within this piece, and with which witnesses?
std::optional<Lh1Witness> piece_lh1(const ExponentFunction::Piece& pc) {
  using Form = ExponentFunction::Form;
  // Work with tau(x) = 1/(p(x)-1); conjugated pieces have
  // tau_q = q - 1 ... handled per form below.
  if (!pc.conjugated) {
    switch (pc.form) {
      case Form::Constant:
        if (pc.c == 1.0) return Lh1Witness{1.0, kEulerE};  // tau = inf
        return std::nullopt;                               // tau constant < inf
      case Form::LogDecay:
        // tau = kappa*log(e+|x|) >= kappa*log|x|
        return Lh1Witness{pc.kappa, kEulerE};
      case Form::PowerDecay: {
        // tau = c0*|x|^k >= log|x| beyond a computable threshold.
        double xstar = std::pow(pc.c0 * pc.k, -1.0 / pc.k);
        auto diff = [&](double x) { return pc.c0 * std::pow(x, pc.k) - std::log(x); };
        double m = std::max(kEulerE, xstar);
        if (diff(m) < 0) {
          double lo = m, hi = m;
          while (diff(hi) < 0) hi *= 2;
          for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            (diff(mid) < 0 ? lo : hi) = mid;
          }
          m = hi;
        }
        return Lh1Witness{1.0, std::max(kEulerE, m)};
      }
      case Form::Affine: {
        // Beyond the clamp point the piece is identically 1 iff the raw
        // affine heads below 1 in the piece's unbounded direction.
        bool towards_pos = pc.domain.hi == kInf;
        double direction = towards_pos ? 1.0 : -1.0;
        if (pc.slope == 0)
          return pc.intercept <= 1.0 ? std::optional(Lh1Witness{1.0, kEulerE})
                                     : std::nullopt;
        if (pc.slope * direction < 0) {
          double xc = (1.0 - pc.intercept) / pc.slope;
          return Lh1Witness{1.0, std::max(kEulerE, std::abs(xc))};
        }
        return std::nullopt;
      }
    }
  } else {
    // q = dual of base; tau_q(x) = 1/(q(x)-1) = p_base(x) - 1.
    switch (pc.form) {
      case Form::Constant:
        if (pc.c == kInf) return Lh1Witness{1.0, kEulerE};  // q = 1
        return std::nullopt;
      case Form::LogDecay:
      case Form::PowerDecay:
        // tau_q = base - 1 -> 0 at infinity: fails.
        return std::nullopt;
      case Form::Affine: {
        bool towards_pos = pc.domain.hi == kInf;
        double direction = towards_pos ? 1.0 : -1.0;
        // tau_q = raw - 1 (clamped below at 0); need raw - 1 >= log|x|.
        if (pc.slope * direction <= 0) return std::nullopt;
        // linear growth beats log; threshold where slope*x+b-1 >= log|x|
        double m = kEulerE;
        auto diff = [&](double x) {
          return pc.slope * direction * x + pc.intercept - 1.0 - std::log(x);
        };
        while (diff(m) < 0 && m < 1e12) m *= 2;
        if (m >= 1e12) return std::nullopt;
        return Lh1Witness{1.0, m};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lh1Witness> check_lh1(const ExponentFunction& p) {
  double kappa = kInf;
  double m = kEulerE;
  for (const auto& pc : p.pieces()) {
    if (pc.domain.hi != kInf && pc.domain.lo != -kInf) {
      // bounded pieces lie inside |x| <= M once M exceeds their endpoints
      m = std::max({m, std::abs(pc.domain.lo), std::abs(pc.domain.hi)});
      continue;
    }
    auto w = piece_lh1(pc);
    if (!w) return std::nullopt;
    kappa = std::min(kappa, w->kappa);
    m = std::max(m, w->m);
    if (is_finite(pc.domain.lo)) m = std::max(m, std::abs(pc.domain.lo));
    if (is_finite(pc.domain.hi)) m = std::max(m, std::abs(pc.domain.hi));
  }
  if (kappa == kInf) kappa = 1.0;  // every tail piece was identically 1
  return Lh1Witness{kappa, m};
}

}  // namespace vexlp
