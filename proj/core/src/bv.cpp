#include "vexlp/bv.hpp"

#include <algorithm>
#include <cmath>

#include "vexlp/quadrature.hpp"

namespace vexlp {

BVFunction::BVFunction(std::vector<Piece> pieces, std::vector<Jump> jumps,
                       double limit_neg, double limit_pos)
    : pieces_(std::move(pieces)),
      jumps_(std::move(jumps)),
      limit_neg_(limit_neg),
      limit_pos_(limit_pos) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.domain.lo < b.domain.lo; });
  std::sort(jumps_.begin(), jumps_.end(),
            [](const Jump& a, const Jump& b) { return a.x < b.x; });
  std::erase_if(jumps_, [](const Jump& j) { return j.height == 0.0; });
}

double BVFunction::operator()(double x) const {
  for (const Piece& pc : pieces_)
    if (pc.domain.contains(x)) return pc.value(x);
  // outside every piece: nearest limit
  if (!pieces_.empty() && x < pieces_.front().domain.lo) return limit_neg_;
  return limit_pos_;
}

double BVFunction::deriv_at(double x) const {
  for (const Piece& pc : pieces_)
    if (pc.domain.contains(x)) return pc.deriv(x);
  return 0;
}

bool BVFunction::has_deriv2() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& pc) { return static_cast<bool>(pc.deriv2); });
}

double BVFunction::deriv2_at(double x) const {
  for (const Piece& pc : pieces_)
    if (pc.domain.contains(x)) return pc.deriv2 ? pc.deriv2(x) : 0.0;
  return 0;
}

DecayProfile BVFunction::value_tail() const {
  DecayProfile out;
  for (const Piece& pc : pieces_) out = out.combined(pc.value_tail);
  return out;
}

DecayProfile BVFunction::deriv_tail() const {
  DecayProfile out;
  for (const Piece& pc : pieces_) out = out.combined(pc.deriv_tail);
  return out;
}

DecayProfile BVFunction::deriv2_tail() const {
  DecayProfile out;
  for (const Piece& pc : pieces_) out = out.combined(pc.deriv2_tail);
  return out;
}

BVFunction BVFunction::from_catalog(const CatalogFunction& f) {
  // sample check that the function is essentially real
  for (double x : {-2.7, -1.3, -0.41, 0.0, 0.37, 0.92, 1.8, 3.6}) {
    if (std::abs(f(x).imag()) > 1e-12 * (1 + std::abs(f(x))))
      throw precondition_error("bv: catalog function must be real-valued");
  }
  std::vector<double> bp = f.breakpoints();
  std::vector<double> edges;
  edges.push_back(-kInf);
  edges.insert(edges.end(), bp.begin(), bp.end());
  edges.push_back(kInf);

  auto value = [f](double x) { return f(x).real(); };
  auto deriv = [f](double x) { return f.derivative_at(x).real(); };
  auto deriv2 = [f](double x) { return f.second_derivative_at(x).real(); };

  std::vector<Piece> pieces;
  const auto candidates = f.peak_candidates();
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Piece pc;
    pc.domain = {edges[i], edges[i + 1]};
    pc.value = value;
    pc.deriv = deriv;
    pc.deriv2 = deriv2;
    for (double c : candidates)
      if (pc.domain.contains(c)) pc.critical_points.push_back(c);
    if (!is_finite(pc.domain.lo) || !is_finite(pc.domain.hi)) {
      pc.value_tail = f.decay();
      pc.deriv_tail = f.derivative_decay();
      pc.deriv2_tail = f.second_derivative_decay();
    }
    pieces.push_back(std::move(pc));
  }

  std::vector<Jump> jumps;
  for (double x : bp) {
    double h = f.jump_at(x);
    if (h != 0) jumps.push_back({x, h});
  }

  BVFunction out(std::move(pieces), std::move(jumps), 0.0, 0.0);
  out.catalog = f;
  return out;
}

BVFunction BVFunction::constant(double v) {
  Piece pc;
  pc.domain = {-kInf, kInf};
  pc.value = [v](double) { return v; };
  pc.deriv = [](double) { return 0.0; };
  pc.deriv2 = [](double) { return 0.0; };
  pc.value_tail = DecayProfile({TailPart::power(std::abs(v), 0.0, 1.0)});
  pc.deriv_tail = DecayProfile::compact(0);
  pc.deriv2_tail = DecayProfile::compact(0);
  return BVFunction({pc}, {}, v, v);
}

BVFunction BVFunction::step(double x0, double h) {
  auto zero = [](double) { return 0.0; };
  Piece left{{-kInf, x0}, zero, zero, zero, {}, DecayProfile::compact(std::abs(x0)),
             DecayProfile::compact(std::abs(x0)), DecayProfile::compact(std::abs(x0))};
  Piece right{{x0, kInf},
              [h](double) { return h; },
              zero,
              zero,
              {},
              DecayProfile({TailPart::power(std::abs(h), 0.0, 1.0)}),
              DecayProfile::compact(std::abs(x0)),
              DecayProfile::compact(std::abs(x0))};
  return BVFunction({left, right}, {{x0, h}}, 0.0, h);
}

BVFunction BVFunction::monomial_window(int n, double a, double b) {
  if (!(b > a)) throw precondition_error("monomial_window: needs a < b");
  auto zero = [](double) { return 0.0; };
  const double rim = std::max(std::abs(a), std::abs(b));
  const double end = std::pow(b, n);
  Piece left{{-kInf, a}, [a, n](double) { return std::pow(a, n); }, zero, zero,
             {},         DecayProfile({TailPart::power(std::abs(std::pow(a, n)), 0, 1)}),
             DecayProfile::compact(rim), DecayProfile::compact(rim)};
  Piece mid{{a, b},
            [n](double t) { return std::pow(t, n); },
            [n](double t) { return n * std::pow(t, n - 1); },
            [n](double t) { return n * (n - 1) * std::pow(t, n - 2); },
            {},
            DecayProfile::compact(rim),
            DecayProfile::compact(rim),
            DecayProfile::compact(rim)};
  Piece right{{b, kInf}, [end](double) { return end; }, zero, zero,
              {},        DecayProfile({TailPart::power(std::abs(end), 0, 1)}),
              DecayProfile::compact(rim), DecayProfile::compact(rim)};
  return BVFunction({left, mid, right}, {}, std::pow(a, n), end);
}

BVFunction BVFunction::power_singularity(double alpha, double a) {
  if (!(alpha > 0) || !(a > 0))
    throw precondition_error("power_singularity: needs alpha > 0 and a > 0");
  auto zero = [](double) { return 0.0; };
  const double cap = std::pow(a, -alpha);
  Piece neg{{-kInf, 0.0}, zero, zero, zero, {}, DecayProfile::compact(0),
            DecayProfile::compact(0), DecayProfile::compact(0)};
  Piece sing{{0.0, a},
             [alpha](double t) { return std::pow(t, -alpha); },
             [alpha](double t) { return -alpha * std::pow(t, -alpha - 1); },
             [alpha](double t) {
               return alpha * (alpha + 1) * std::pow(t, -alpha - 2);
             },
             {},
             DecayProfile::compact(a),
             DecayProfile::compact(a),
             DecayProfile::compact(a)};
  Piece flat{{a, kInf}, [cap](double) { return cap; }, zero, zero,
             {},        DecayProfile({TailPart::power(cap, 0, 1)}),
             DecayProfile::compact(a), DecayProfile::compact(a)};
  BVFunction out({neg, sing, flat}, {}, 0.0, cap);
  out.zero_singularity = TailPart::power(1.0, alpha, a);
  out.zero_singularity_deriv = TailPart::power(alpha, alpha + 1, a);
  return out;
}

BVFunction BVFunction::operator+(const BVFunction& other) const {
  std::vector<double> edges;
  auto collect = [&edges](const BVFunction& g) {
    for (const auto& pc : g.pieces()) {
      if (is_finite(pc.domain.lo)) edges.push_back(pc.domain.lo);
      if (is_finite(pc.domain.hi)) edges.push_back(pc.domain.hi);
    }
  };
  collect(*this);
  collect(other);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<double> all{-kInf};
  all.insert(all.end(), edges.begin(), edges.end());
  all.push_back(kInf);

  const BVFunction a = *this, b = other;  // captured by value below
  const bool with_d2 = a.has_deriv2() && b.has_deriv2();
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    Piece pc;
    pc.domain = {all[i], all[i + 1]};
    pc.value = [a, b](double x) { return a(x) + b(x); };
    pc.deriv = [a, b](double x) { return a.deriv_at(x) + b.deriv_at(x); };
    if (with_d2)
      pc.deriv2 = [a, b](double x) { return a.deriv2_at(x) + b.deriv2_at(x); };
    for (const auto& src : {&a, &b})
      for (const auto& spc : src->pieces())
        for (double c : spc.critical_points)
          if (pc.domain.contains(c)) pc.critical_points.push_back(c);
    if (!is_finite(pc.domain.lo) || !is_finite(pc.domain.hi)) {
      pc.value_tail = a.value_tail().combined(b.value_tail());
      pc.deriv_tail = a.deriv_tail().combined(b.deriv_tail());
      pc.deriv2_tail = a.deriv2_tail().combined(b.deriv2_tail());
    }
    pieces.push_back(std::move(pc));
  }
  std::vector<Jump> jumps = jumps_;
  for (const auto& j : other.jumps()) {
    auto it = std::find_if(jumps.begin(), jumps.end(),
                           [&](const Jump& k) { return k.x == j.x; });
    if (it != jumps.end())
      it->height += j.height;
    else
      jumps.push_back(j);
  }
  return BVFunction(std::move(pieces), std::move(jumps),
                    limit_neg_ + other.limit_neg_, limit_pos_ + other.limit_pos_);
}

BVFunction BVFunction::scaled(double c) const {
  BVFunction out = *this;
  for (auto& pc : out.pieces_) {
    auto v = pc.value, d = pc.deriv, d2 = pc.deriv2;
    pc.value = [v, c](double x) { return c * v(x); };
    pc.deriv = [d, c](double x) { return c * d(x); };
    if (d2) pc.deriv2 = [d2, c](double x) { return c * d2(x); };
    pc.value_tail = pc.value_tail.scaled(c);
    pc.deriv_tail = pc.deriv_tail.scaled(c);
    pc.deriv2_tail = pc.deriv2_tail.scaled(c);
  }
  for (auto& j : out.jumps_) j.height *= c;
  out.limit_neg_ *= c;
  out.limit_pos_ *= c;
  if (out.catalog) out.catalog = out.catalog->scaled(cplx(c));
  return out;
}

double total_variation(const BVFunction& g, double tol) {
  double tv = 0;
  for (const auto& pc : g.pieces()) {
    Integrand h = real_integrand([&pc](double t) { return std::abs(pc.deriv(t)); },
                                 pc.critical_points);
    const bool unbounded = !is_finite(pc.domain.lo) || !is_finite(pc.domain.hi);
    QuadratureResult r;
    if (!unbounded) {
      r = integrate(h, pc.domain.lo, pc.domain.hi, tol);
    } else {
      const DecayProfile& dp = pc.deriv_tail;
      auto tail = [&dp](double t) { return dp.tail_integral(t); };
      double t = 16;
      while (tail(t) > 0.5 * tol && t < 1e13) t *= 2;
      if (tail(t) > 0.5 * tol)
        throw numeric_error("total_variation: derivative tail not integrable");
      const double lo = std::max(pc.domain.lo, -t);
      const double hi = std::min(pc.domain.hi, t);
      if (hi > lo) r = integrate(h, lo, hi, 0.5 * tol);
      r.error_estimate += tail(t);
    }
    tv += r.value.real();
  }
  for (const auto& j : g.jumps()) tv += std::abs(j.height);
  return tv;
}

namespace {

// tail bound for \int_{|t|>T} |f(t) g(x-t)| dt
double conv_tail(const DecayProfile& fd, double f_l1, double f_sup,
                 const DecayProfile& gd, double g_l1, double g_sup, double x,
                 double t) {
  double best = kInf;
  if (is_finite(g_l1)) best = std::min(best, fd.sup_beyond(t) * g_l1);
  if (is_finite(g_sup)) best = std::min(best, fd.tail_integral(t) * g_sup);
  // shift: |x - t| >= t - |x| when |t| > t
  const double shifted = t - std::abs(x);
  if (shifted > gd.threshold()) {
    if (is_finite(f_l1)) best = std::min(best, gd.sup_beyond(shifted) * f_l1);
    if (is_finite(f_sup)) best = std::min(best, gd.tail_integral(shifted) * f_sup);
  }
  return best;
}

}  // namespace

cplx convolve_at(const CatalogFunction& f, const CatalogFunction& g, double x,
                 double tol) {
  if (!f.is_l1() || !g.is_l1())
    throw precondition_error("convolve: both factors must be integrable");
  const double f_l1 = f.l1_norm_bound(), g_l1 = g.l1_norm_bound();
  const double f_sup = f.sup_bound(), g_sup = g.sup_bound();
  const DecayProfile fd = f.decay(), gd = g.decay();
  Integrand h;
  h.f = [&f, &g, x](double t) { return f(t) * g(x - t); };
  for (double b : f.breakpoints()) h.breakpoints.push_back(b);
  for (double b : g.breakpoints()) h.breakpoints.push_back(x - b);
  QuadratureResult r = integrate_improper(
      h,
      [&](double t) { return conv_tail(fd, f_l1, f_sup, gd, g_l1, g_sup, x, t); },
      tol, 16 + std::abs(x));
  if (!r.converged) throw numeric_error("convolve: quadrature failed");
  return r.value;
}

cplx convolve_at(const BVFunction& f, const CatalogFunction& g, double x,
                 double tol) {
  if (f.catalog) return convolve_at(*f.catalog, g, x, tol);
  if (!g.is_l1()) throw precondition_error("convolve: factor not integrable");
  const double g_l1 = g.l1_norm_bound(), g_sup = g.sup_bound();
  const DecayProfile fd = f.value_tail(), gd = g.decay();
  Integrand h;
  h.f = [&f, &g, x](double t) { return f(t) * g(x - t); };
  for (const auto& pc : f.pieces()) {
    if (is_finite(pc.domain.lo)) h.breakpoints.push_back(pc.domain.lo);
    if (is_finite(pc.domain.hi)) h.breakpoints.push_back(pc.domain.hi);
  }
  for (double b : g.breakpoints()) h.breakpoints.push_back(x - b);
  QuadratureResult r = integrate_improper(
      h,
      [&](double t) {
        return conv_tail(fd, kInf, 10 * (1 + fd.sup_beyond(0)), gd, g_l1, g_sup, x,
                         t);
      },
      tol, 16 + std::abs(x));
  if (!r.converged) throw numeric_error("convolve: quadrature failed");
  return r.value;
}

SampledFunction convolve(const CatalogFunction& f, const CatalogFunction& g,
                         const std::vector<double>& grid, double tol) {
  SampledFunction out;
  out.x = grid;
  out.value.reserve(grid.size());
  for (double x : grid) out.value.push_back(convolve_at(f, g, x, tol));
  // convolution inherits the weaker decay of the two factors
  out.decay = f.decay().combined(g.decay());
  return out;
}

}  // namespace vexlp
