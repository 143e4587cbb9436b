#include "vexlp/modular.hpp"

#include <algorithm>
#include <cmath>

#include "vexlp/quadrature.hpp"

namespace vexlp {

Density as_density(const CatalogFunction& f) {
  Density d;
  d.eval = [f](double x) { return f(x); };
  d.decay = f.decay();
  d.breakpoints = f.breakpoints();
  d.peak_candidates = f.peak_candidates();
  d.known_zero = f.is_zero();
  return d;
}

double sup_abs(const Density& f, const IntervalSet& region) {
  if (f.known_zero || region.empty()) return 0;
  double best = 0;
  for (double c : f.peak_candidates)
    if (region.contains(c)) best = std::max(best, std::abs(f.eval(c)));

  for (const Interval& iv : region.parts()) {
    double t = std::max(16.0, f.decay.threshold() + 1);
    // clip unbounded ends once the envelope falls under the running max
    while ((iv.lo == -kInf || iv.hi == kInf) && f.decay.sup_beyond(t) > best &&
           t < 1e12)
      t *= 2;
    best = std::max(best, f.decay.sup_beyond(t));
    const double lo = std::max(iv.lo, -t);
    const double hi = std::min(iv.hi, t);
    if (!(hi > lo)) continue;
    std::size_t n = 2049;
    double prev = -1;
    for (int round = 0; round < 4; ++round) {
      double m = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * double(i) / double(n);
        m = std::max(m, std::abs(f.eval(x)));
      }
      if (round > 0 && std::abs(m - prev) <= 1e-9 * std::max(1.0, m)) {
        prev = m;
        break;
      }
      prev = m;
      n *= 2;
    }
    best = std::max(best, prev);
  }
  return best;
}

namespace {

// Lebesgue part over one interval of region \ omega_inf.
struct LebesguePart {
  double value = 0;
  double error = 0;
  bool converged = true;
  bool divergent = false;
};

LebesguePart lebesgue_on_interval(const Density& f, const ExponentFunction& p,
                                  const Interval& iv, double lambda, double tol) {
  LebesguePart out;
  auto w = [&f, &p, lambda](double x) {
    const double v = std::abs(f.eval(x)) / lambda;
    if (v == 0) return cplx(0);
    return cplx(std::pow(v, p(x)), 0.0);
  };
  Integrand h;
  h.f = w;
  h.breakpoints = f.breakpoints;
  for (double b : p.breakpoints()) h.breakpoints.push_back(b);

  const bool unbounded = iv.lo == -kInf || iv.hi == kInf;
  QuadratureResult r;
  if (!unbounded) {
    r = integrate(h, iv.lo, iv.hi, tol);
  } else {
    auto tail_bound = [&](double t) {
      const double sup = f.decay.sup_beyond(t) / lambda;
      if (!(sup <= 1.0)) return kInf;
      const double p_tail = p.tail_p_minus(t);
      return f.decay.scaled(1.0 / lambda).tail_integral_pow(t, p_tail);
    };
    r = integrate_improper(h, tail_bound, tol, 16);
    if (!r.converged && r.required_radius > 0) {
      // envelope never certifies a finite tail: divergent modular
      out.divergent = true;
      out.value = kInf;
      return out;
    }
    // Clip the computed window to the actual interval if one side is finite.
    if (is_finite(iv.lo) || is_finite(iv.hi)) {
      // redo on the clipped window with the same radius
      double t = std::max({16.0, std::abs(iv.lo), std::abs(iv.hi)});
      while (tail_bound(t) > 0.5 * tol && t < 1e13) t *= 2;
      if (tail_bound(t) > 0.5 * tol) {
        out.divergent = true;
        out.value = kInf;
        return out;
      }
      const double lo = std::max(iv.lo, -t), hi = std::min(iv.hi, t);
      r = hi > lo ? integrate(h, lo, hi, 0.5 * tol) : QuadratureResult{};
      r.error_estimate += tail_bound(t);
    }
  }
  out.value = r.value.real();
  out.error = r.error_estimate;
  out.converged = r.converged;
  if (!std::isfinite(out.value)) {
    out.divergent = true;
    out.value = kInf;
  }
  // Budget exhaustion with a large estimate is divergence in practice
  // (the integrand blows up on a set of positive measure).
  if (!r.converged && out.value > 8.0) {
    out.divergent = true;
    out.value = kInf;
  }
  return out;
}

}  // namespace

ModularValue modular(const Density& f, const ExponentFunction& p,
                     const IntervalSet& region, double lambda, double tol) {
  if (!(lambda > 0)) throw precondition_error("modular: lambda must be > 0");
  ModularValue mv;
  if (f.known_zero) return mv;

  const PartitionSets sets = partition(p);
  const IntervalSet ess_region = region.intersect(sets.omega_inf);
  IntervalSet leb_region;
  for (const Interval& iv : region.parts())
    leb_region = leb_region.unite(sets.omega_inf.complement_in(iv));

  const std::size_t n = std::max<std::size_t>(leb_region.parts().size(), 1);
  for (const Interval& iv : leb_region.parts()) {
    LebesguePart part = lebesgue_on_interval(f, p, iv, lambda, tol / double(n));
    if (part.divergent) {
      mv.lebesgue_part = kInf;
      mv.total = kInf;
      return mv;
    }
    mv.lebesgue_part += part.value;
    mv.converged = mv.converged && part.converged;
  }
  mv.esssup_part = ess_region.empty() ? 0.0 : sup_abs(f, ess_region) / lambda;
  mv.total = mv.lebesgue_part + mv.esssup_part;
  return mv;
}

ModularValue modular(const CatalogFunction& f, const ExponentFunction& p,
                     const IntervalSet& region, double lambda, double tol) {
  return modular(as_density(f), p, region, lambda, tol);
}

NormResult luxemburg_norm(const Density& f, const ExponentFunction& p,
                          double tol) {
  NormResult res;
  if (f.known_zero) {
    res.modular_at_value = 0;
    return res;
  }
  const IntervalSet line = IntervalSet::whole_line();

  auto rho = [&](double lambda, double qtol) {
    return modular(f, p, line, lambda, qtol).total;
  };
  // Loose evaluations while bracketing, tight near the unit-modular root.
  auto rho_adaptive = [&](double lambda) {
    double r = rho(lambda, 1e-6);
    if (std::abs(r - 1.0) < 0.25) r = rho(lambda, 1e-10);
    return r;
  };

  double lo = 0, hi = 0;
  const double r1 = rho_adaptive(1.0);
  if (r1 <= 1.0) {
    hi = 1.0;
    lo = 0.5;
    int guard = 0;
    while (rho_adaptive(lo) <= 1.0 && ++guard < 60) {
      hi = lo;
      lo *= 0.5;
    }
    if (guard >= 60) {
      // modular stays <= 1 down to 2^-60: the function is null
      res.value = 0;
      res.bracket_hi = lo;
      res.modular_at_value = 0;
      res.diagnostic = "modular <= 1 for all probed lambda; treating as null";
      return res;
    }
  } else {
    lo = 1.0;
    hi = 2.0;
    int guard = 0;
    while (rho_adaptive(hi) > 1.0 && ++guard < 60) {
      lo = hi;
      hi *= 2.0;
    }
    if (guard >= 60) {
      res.finite = false;
      res.value = kInf;
      res.bracket_lo = lo;
      res.bracket_hi = kInf;
      res.diagnostic = "no lambda <= 2^60 with modular <= 1";
      return res;
    }
  }

  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (rho_adaptive(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  res.value = hi;
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.modular_at_value = rho(hi, 1e-10);
  return res;
}

NormResult luxemburg_norm(const CatalogFunction& f, const ExponentFunction& p,
                          double tol) {
  return luxemburg_norm(as_density(f), p, tol);
}

HolderReport holder_check(const CatalogFunction& f, const CatalogFunction& g,
                          const ExponentFunction& p, double tol) {
  HolderReport rep;
  const ExponentFunction q = conjugate(p);
  NormResult nf = luxemburg_norm(f, p, tol);
  NormResult ng = luxemburg_norm(g, q, tol);
  rep.k = holder_constant(p);
  rep.norm_f = nf.value;
  rep.norm_g = ng.value;
  if (!nf.finite || !ng.finite) {
    rep.skipped = true;
    rep.diagnostic = "a Luxemburg norm diverged; check skipped";
    return rep;
  }

  Integrand h;
  h.f = [&f, &g](double x) { return cplx(std::abs(f(x)) * std::abs(g(x)), 0); };
  h.breakpoints = f.breakpoints();
  for (double b : g.breakpoints()) h.breakpoints.push_back(b);
  const DecayProfile fd = f.decay(), gd = g.decay();
  const double fl1 = f.l1_norm_bound(), gl1 = g.l1_norm_bound();
  const double fsup = f.sup_bound(), gsup = g.sup_bound();
  auto tail = [&](double t) {
    double best = kInf;
    if (is_finite(gl1)) best = std::min(best, fd.sup_beyond(t) * gl1);
    if (is_finite(fl1)) best = std::min(best, gd.sup_beyond(t) * fl1);
    best = std::min(best, fd.tail_integral(t) * gsup);
    best = std::min(best, gd.tail_integral(t) * fsup);
    return best;
  };
  QuadratureResult lhs = integrate_improper(h, tail, 1e-9);
  if (!lhs.converged) {
    rep.skipped = true;
    rep.diagnostic = "lhs quadrature failed";
    return rep;
  }
  rep.lhs = lhs.value.real();
  rep.rhs = rep.k * nf.value * ng.value;
  rep.pass = rep.lhs <= rep.rhs * (1 + 1e-9) + 1e-9;
  return rep;
}

}  // namespace vexlp
