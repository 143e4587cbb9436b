#include "vexlp/psi.hpp"

#include <algorithm>
#include <cmath>

#include "vexlp/modular.hpp"
#include "vexlp/quadrature.hpp"
#include "vexlp/special.hpp"

namespace vexlp {

cplx u_kernel(double s, double t) {
  if (s == 0) return 0;
  const double st = s * t;
  if (std::abs(st) < 1e-4) {
    // s * sum_k (-ist)^k / (k+1)!, truncation error below 1e-16 relative
    const cplx z(0, -st);
    return s * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0))));
  }
  return (1.0 - std::exp(cplx(0, -st))) / cplx(0, t);
}

namespace {

double psi_tail_bound(const DecayProfile& decay, double s, double t) {
  double sum = 0;
  for (const TailPart& part : decay.parts()) {
    if (part.kind == TailPart::Kind::Power) {
      // |u_s f| <= 2 A |t|^{-alpha-1}: integrable for every alpha > 0
      const double tt = std::max(t, part.threshold);
      sum += 4.0 * part.amp * std::pow(tt, -part.alpha) / part.alpha;
    } else {
      sum += std::min(std::abs(s), 2.0 / t) * part.tail_integral(t);
    }
  }
  return sum;
}

}  // namespace

cplx psi(const CatalogFunction& f, double s, double tol) {
  if (s == 0 || f.is_zero()) return 0;
  Integrand h;
  h.f = [&f, s](double t) { return u_kernel(s, t) * f(t); };
  h.breakpoints = f.breakpoints();
  h.osc_freq = s;
  const DecayProfile decay = f.decay();
  QuadratureResult r = integrate_improper(
      h, [&decay, s](double t) { return psi_tail_bound(decay, s, t); }, tol);
  if (!r.converged)
    throw numeric_error("psi: quadrature failed at s=" + std::to_string(s));
  return r.value;
}

PsiEvaluation psi_grid(const CatalogFunction& f, const std::vector<double>& s_grid,
                       double tol) {
  PsiEvaluation out;
  out.s_grid = s_grid;
  for (double s : s_grid) {
    out.values.push_back(psi(f, s, tol));
    out.errors.push_back(s == 0 ? 0.0 : tol);
  }
  return out;
}

namespace {

// moments \int_{-pi/2}^{pi/2} u^{2j} cos^q(u) du for j = 0, 1, 2
void cos_pow_moments(double q, double& i0, double& i2, double& i4) {
  auto moment = [q](int pow2) {
    Integrand h = real_integrand([q, pow2](double u) {
      const double c = std::cos(u);
      if (c <= 0) return 0.0;
      return std::pow(std::abs(u), double(pow2)) * std::pow(c, q);
    });
    return integrate(h, -0.5 * kPi, 0.5 * kPi, 1e-13).value.real();
  };
  i0 = moment(0);
  i2 = moment(2);
  i4 = moment(4);
}

// sum_{k >= k0} (k + 1/2)^{-beta} by Euler-Maclaurin through the f''' term;
// the first omitted term is below 1e-12 for k0 = 64 and beta > 1.
double half_shifted_zeta_tail(double beta, int k0) {
  const double a = k0 + 0.5;
  double s = std::pow(a, 1.0 - beta) / (beta - 1.0);
  s += 0.5 * std::pow(a, -beta);
  s += beta / 12.0 * std::pow(a, -beta - 1.0);
  s -= beta * (beta + 1.0) * (beta + 2.0) / 720.0 * std::pow(a, -beta - 3.0);
  return s;
}

}  // namespace

double c_q(double q, double tol) {
  if (q == kInf) return 1.0;
  if (!(q > 1.0))
    throw precondition_error("c_q: requires q > 1 (the integral diverges)");

  constexpr int kPeriods = 64;
  const double cut = kPeriods * kPi;

  Integrand h = real_integrand([q](double y) {
    const double sc = sinc(y);
    return std::pow(std::abs(sc), q);
  });
  for (int k = 1; k < kPeriods; ++k) h.breakpoints.push_back(k * kPi);
  QuadratureResult interior = integrate(h, 0.0, cut, std::min(tol, 1e-12));

  // Tail, one period at a time: on [k pi, (k+1) pi] write |sin y| = cos(u)
  // with u = y - m, m = (k + 1/2) pi, expand y^{-q} about m (odd moments
  // vanish), and sum the closed-form coefficients over k.
  double i0, i2, i4;
  cos_pow_moments(q, i0, i2, i4);
  const double c2 = q * (q + 1.0) / 2.0;
  const double c4 = q * (q + 1.0) * (q + 2.0) * (q + 3.0) / 24.0;
  const double s0 = std::pow(kPi, -q) * half_shifted_zeta_tail(q, kPeriods);
  const double s2 =
      std::pow(kPi, -q - 2.0) * half_shifted_zeta_tail(q + 2.0, kPeriods);
  const double s4 =
      std::pow(kPi, -q - 4.0) * half_shifted_zeta_tail(q + 4.0, kPeriods);
  const double tail = i0 * s0 + c2 * i2 * s2 + c4 * i4 * s4;

  const double integral = interior.value.real() + tail;
  return std::pow(4.0, 1.0 / q) * std::pow(integral, 1.0 / q);
}

const char* regime_name(BoundRegime r) {
  switch (r) {
    case BoundRegime::FinitePPlus:
      return "finite-p_plus";
    case BoundRegime::PMinusGt1:
      return "p_minus-gt-1";
    case BoundRegime::Lh1:
      return "lh1";
    case BoundRegime::PowerDecayExample:
      return "power-decay-example";
  }
  return "?";
}

BoundRegime regime_from_name(const std::string& name) {
  if (name == "finite-p_plus") return BoundRegime::FinitePPlus;
  if (name == "p_minus-gt-1") return BoundRegime::PMinusGt1;
  if (name == "lh1") return BoundRegime::Lh1;
  if (name == "power-decay-example") return BoundRegime::PowerDecayExample;
  throw precondition_error("unknown bound regime: " + name);
}

namespace {

void fill_crossover(BoundContext& ctx) {
  if (ctx.e_large == ctx.e_small) {
    ctx.crossover = 1.0;
    return;
  }
  ctx.crossover = std::pow(ctx.coeff_small / ctx.coeff_large,
                           1.0 / (ctx.e_large - ctx.e_small));
}

// Checks 1 - 1/p(x) <= C / log(e + |x|) on a dense grid. The tail pieces
// were validated symbolically by check_lh1; this guards the global constant
// that enters the bound.
void verify_lh1_global(const ExponentFunction& p, double c) {
  for (int i = 0; i <= 4000; ++i) {
    const double mag = std::pow(10.0, -6.0 + 15.0 * i / 4000.0);
    for (double x : {mag, -mag}) {
      const double lhs = 1.0 - 1.0 / p(x);
      const double rhs = c / std::log(kEulerE + std::abs(x));
      if (lhs > rhs * (1 + 1e-12) + 1e-15)
        throw precondition_error(
            "lh1 regime: hypothesis 1/q(x) <= C/log(e+|x|) fails at x=" +
            std::to_string(x) + " with C=" + std::to_string(c));
    }
  }
}

// Extracts the (c0, k) pair for the power-decay regime and checks
// p(x) <= 1 + |x|^{-k}/c0 on a dense grid.
std::pair<double, double> power_decay_params(const ExponentFunction& p) {
  double c0 = 0, k = 0;
  bool found = false;
  for (const auto& pc : p.pieces()) {
    if (pc.form == ExponentFunction::Form::PowerDecay && !pc.conjugated) {
      if (found && (pc.c0 != c0 || pc.k != k))
        throw precondition_error("power-decay regime: pieces disagree on (c0, k)");
      c0 = pc.c0;
      k = pc.k;
      found = true;
    }
  }
  if (!found)
    throw precondition_error("power-decay regime: exponent has no power-decay piece");
  for (int i = 0; i <= 4000; ++i) {
    const double mag = std::pow(10.0, -6.0 + 15.0 * i / 4000.0);
    for (double x : {mag, -mag}) {
      const double bound = 1.0 + std::pow(std::abs(x), -k) / c0;
      if (p(x) > bound * (1 + 1e-12))
        throw precondition_error(
            "power-decay regime: hypothesis p(x) <= 1 + |x|^{-k}/c0 fails at x=" +
            std::to_string(x));
    }
  }
  return {c0, k};
}

}  // namespace

BoundContext make_bound_context(const ExponentFunction& p, BoundRegime regime) {
  BoundContext ctx;
  ctx.regime = regime;
  ctx.k_p = holder_constant(p);
  ctx.p_minus = p.p_minus();
  ctx.p_plus = p.p_plus();
  ctx.q_minus = conjugate_value(ctx.p_plus);
  ctx.q_plus = conjugate_value(ctx.p_minus);
  const PartitionSets sets = partition(p);
  const double delta1 = delta_indicator(sets.omega_1);

  switch (regime) {
    case BoundRegime::PMinusGt1: {
      if (!(ctx.p_minus > 1.0))
        throw precondition_error("p_minus-gt-1 regime: requires p_- > 1");
      if (!(ctx.p_plus < kInf))
        throw precondition_error("p_minus-gt-1 regime: requires p_+ < inf");
      ctx.c_qminus = c_q(ctx.q_minus);
      const double ratio = ctx.q_plus == kInf ? 0.0 : ctx.q_minus / ctx.q_plus;
      ctx.coeff_large = ctx.k_p * std::pow(ctx.c_qminus, ratio);
      ctx.e_large = 1.0 / ctx.p_minus;
      ctx.coeff_small = ctx.k_p * ctx.c_qminus;
      ctx.e_small = 1.0 / ctx.p_plus;
      break;
    }
    case BoundRegime::FinitePPlus: {
      if (!(ctx.p_plus < kInf))
        throw precondition_error("finite-p_plus regime: requires p_+ < inf");
      if (ctx.p_plus == 1.0) {
        ctx.coeff_small = ctx.coeff_large = 1.0;
        ctx.e_small = ctx.e_large = 1.0;
      } else if (ctx.p_minus == 1.0) {
        ctx.c_qminus = c_q(ctx.q_minus);
        ctx.coeff_large = ctx.k_p;
        ctx.e_large = 1.0;
        ctx.coeff_small = ctx.k_p * ctx.c_qminus;
        ctx.e_small = 1.0 / ctx.p_plus;
      } else {
        return make_bound_context(p, BoundRegime::PMinusGt1);
      }
      break;
    }
    case BoundRegime::Lh1: {
      auto w = check_lh1(p);
      if (!w)
        throw precondition_error(
            "lh1 regime: 1/p is not log-Hoelder decaying with limit exponent 1");
      ctx.lh1_c = 1.0 / w->kappa;
      verify_lh1_global(p, ctx.lh1_c);
      const double inv_pp = ctx.p_plus == kInf ? 0.0 : 1.0 / ctx.p_plus;
      const double coeff =
          delta1 + (2.0 - inv_pp) * std::exp(ctx.lh1_c * (lambert_w(2.0) + 1.0));
      ctx.coeff_small = ctx.coeff_large = coeff;
      ctx.e_small = ctx.e_large = 1.0;
      break;
    }
    case BoundRegime::PowerDecayExample: {
      auto [c0, k] = power_decay_params(p);
      const double inv_pp = ctx.p_plus == kInf ? 0.0 : 1.0 / ctx.p_plus;
      const double arg =
          std::pow(2.0 * gamma_positive(1.0 / k) /
                       (std::pow(k, k + 1.0) * std::pow(c0, 1.0 / k)),
                   1.0 / k);
      const double coeff = delta1 + (2.0 - inv_pp) * std::exp(k * lambert_w(arg));
      ctx.coeff_small = ctx.coeff_large = coeff;
      ctx.e_small = ctx.e_large = 1.0;
      break;
    }
  }
  fill_crossover(ctx);
  return ctx;
}

double bound_rhs(const BoundContext& ctx, double f_norm, double s) {
  if (s == 0) return 0;
  const double as = std::abs(s);
  return f_norm * std::max(ctx.coeff_small * std::pow(as, ctx.e_small),
                           ctx.coeff_large * std::pow(as, ctx.e_large));
}

double bound_rhs(const ExponentFunction& p, double f_norm, double s,
                 BoundRegime regime) {
  return bound_rhs(make_bound_context(p, regime), f_norm, s);
}

BoundCertificate certify_bounds(const CatalogFunction& f,
                                const ExponentFunction& p,
                                const std::vector<double>& s_grid,
                                BoundRegime regime, double tol) {
  BoundCertificate cert;
  cert.regime = regime;
  const BoundContext ctx = make_bound_context(p, regime);
  NormResult norm = luxemburg_norm(f, p, tol);
  if (!norm.finite)
    throw precondition_error("certify_bounds: ||f||_p is not finite");
  cert.f_norm = norm.value;
  cert.min_margin = kInf;
  for (double s : s_grid) {
    const double lhs = std::abs(psi(f, s, std::min(tol, 1e-9)));
    const double rhs = bound_rhs(ctx, cert.f_norm, s);
    const double margin = rhs - lhs;
    cert.rows.push_back({s, lhs, rhs, margin});
    cert.min_margin = std::min(cert.min_margin, margin);
  }
  if (cert.rows.empty()) cert.min_margin = 0;
  cert.pass = true;
  for (const auto& row : cert.rows)
    if (row.margin < -1e-9 * std::max(1.0, row.rhs)) cert.pass = false;
  return cert;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw precondition_error("loglog_slope: need at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

HolderExponentEstimate holder_exponent_estimate(const CatalogFunction& f,
                                                double s0,
                                                const std::vector<double>& h_grid,
                                                double tol) {
  HolderExponentEstimate est;
  const cplx base = s0 == 0 ? cplx(0) : psi(f, s0, tol);
  std::vector<double> hs, ds;
  for (double h : h_grid) {
    const double d = std::abs(psi(f, s0 + h, tol) - base);
    if (d > 1e3 * tol) {
      hs.push_back(h);
      ds.push_back(d);
    }
  }
  if (hs.size() < 2) return est;  // every difference sits at the noise floor
  est.alpha_hat = loglog_slope(hs, ds);
  est.conclusive = true;
  return est;
}

}  // namespace vexlp
