#include "vexlp/funcspace.hpp"

#include <algorithm>
#include <cmath>

#include "vexlp/quadrature.hpp"
#include "vexlp/special.hpp"

namespace vexlp {

namespace {

cplx poly_eval(const std::vector<cplx>& c, cplx u) {
  cplx v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * u + c[i];
  return v;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
  std::vector<cplx> d;
  for (std::size_t n = 1; n < c.size(); ++n) d.push_back(c[n] * double(n));
  return d;
}

std::vector<cplx> poly_shift_up(const std::vector<cplx>& c) {  // multiply by u
  std::vector<cplx> d(c.size() + 1, cplx(0));
  for (std::size_t n = 0; n < c.size(); ++n) d[n + 1] = c[n];
  return d;
}

std::vector<cplx> poly_axpy(cplx alpha, const std::vector<cplx>& x,
                            const std::vector<cplx>& y) {
  std::vector<cplx> out(std::max(x.size(), y.size()), cplx(0));
  for (std::size_t n = 0; n < x.size(); ++n) out[n] += alpha * x[n];
  for (std::size_t n = 0; n < y.size(); ++n) out[n] += y[n];
  return out;
}

double hat_value(const HatPrim& h, double x) {
  const double m = 0.5 * (h.lo + h.hi);
  const double half = 0.5 * (h.hi - h.lo);
  const double u = std::abs((x - m) / half);
  return u < 1.0 ? 1.0 - u : 0.0;
}

bool power_tail_support(const PowerTailPrim& p, double x) {
  return p.side * (x - p.origin) > p.cutoff;
}

struct Evaluator {
  double x;
  cplx operator()(const GaussianPrim& g) const {
    const double u = x - g.center;
    return std::exp(-g.a * u * u) * cis(g.freq * x);
  }
  cplx operator()(const PolyGaussianPrim& g) const {
    const double u = x - g.center;
    return poly_eval(g.coeffs, cplx(u)) * std::exp(-g.a * u * u) * cis(g.freq * x);
  }
  cplx operator()(const IndicatorPrim& g) const {
    return (x >= g.lo && x < g.hi) ? cis(g.freq * x) : cplx(0);
  }
  cplx operator()(const HatPrim& g) const { return hat_value(g, x) * cis(g.freq * x); }
  cplx operator()(const PowerTailPrim& g) const {
    if (!power_tail_support(g, x)) return 0;
    return std::pow(g.side * (x - g.origin), -g.alpha) * cis(g.freq * x);
  }
};

// Certified gaussian envelope amp for |P(u)| e^{-a u^2} <= amp e^{-(a/2) u^2},
// via max_u |u|^n e^{-(a/2)u^2} = (n/a)^{n/2} e^{-n/2}.
double poly_gauss_amp(const std::vector<cplx>& coeffs, double a) {
  double amp = 0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    double peak = n == 0 ? 1.0 : std::pow(double(n) / a, 0.5 * double(n)) *
                                     std::exp(-0.5 * double(n));
    amp += std::abs(coeffs[n]) * peak;
  }
  return amp;
}

TailPart term_decay(const CatalogFunction::Term& t) {
  const double mag = std::abs(t.coeff);
  return std::visit(
      [&](const auto& prim) -> TailPart {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, GaussianPrim>) {
          if (prim.center == 0) return TailPart::gauss(mag, prim.a);
          return TailPart::gauss(mag * std::exp(prim.a * prim.center * prim.center),
                                 0.5 * prim.a);
        } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
          const double amp = poly_gauss_amp(prim.coeffs, prim.a);
          const double shift = std::exp(0.5 * prim.a * prim.center * prim.center);
          return TailPart::gauss(mag * amp * shift, 0.25 * prim.a);
        } else if constexpr (std::is_same_v<T, IndicatorPrim>) {
          return TailPart::compact(std::max(std::abs(prim.lo), std::abs(prim.hi)));
        } else if constexpr (std::is_same_v<T, HatPrim>) {
          return TailPart::compact(std::max(std::abs(prim.lo), std::abs(prim.hi)));
        } else {
          static_assert(std::is_same_v<T, PowerTailPrim>);
          const double thr =
              std::max(1.0, 2.0 * std::abs(prim.origin) + prim.cutoff);
          return TailPart::power(mag * std::pow(2.0, prim.alpha), prim.alpha, thr);
        }
      },
      t.prim);
}

}  // namespace

CatalogFunction CatalogFunction::gaussian(double a, double center, double freq) {
  if (!(a > 0)) throw precondition_error("gaussian: width parameter must be > 0");
  return CatalogFunction({{cplx(1), GaussianPrim{a, center, freq}}});
}

CatalogFunction CatalogFunction::poly_gaussian(std::vector<cplx> coeffs, double a,
                                               double center, double freq) {
  if (!(a > 0)) throw precondition_error("poly_gaussian: width must be > 0");
  return CatalogFunction(
      {{cplx(1), PolyGaussianPrim{std::move(coeffs), a, center, freq}}});
}

CatalogFunction CatalogFunction::indicator(double lo, double hi) {
  if (!(hi > lo)) throw precondition_error("indicator: needs lo < hi");
  return CatalogFunction({{cplx(1), IndicatorPrim{lo, hi, 0}}});
}

CatalogFunction CatalogFunction::hat(double lo, double hi) {
  if (!(hi > lo)) throw precondition_error("hat: needs lo < hi");
  return CatalogFunction({{cplx(1), HatPrim{lo, hi, 0}}});
}

CatalogFunction CatalogFunction::power_tail(double alpha, double cutoff) {
  if (!(alpha > 0)) throw precondition_error("power_tail: alpha must be > 0");
  if (!(cutoff > 0)) throw precondition_error("power_tail: cutoff must be > 0");
  return CatalogFunction({{cplx(1), PowerTailPrim{alpha, cutoff, 0, +1, 0}}});
}

cplx CatalogFunction::operator()(double x) const {
  cplx v = 0;
  for (const Term& t : terms_) v += t.coeff * std::visit(Evaluator{x}, t.prim);
  return v;
}

CatalogFunction CatalogFunction::translated(double a) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    std::visit(
        [&](auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          t.coeff *= cis(-prim.freq * a);
          if constexpr (std::is_same_v<T, GaussianPrim> ||
                        std::is_same_v<T, PolyGaussianPrim>) {
            prim.center += a;
          } else if constexpr (std::is_same_v<T, IndicatorPrim> ||
                               std::is_same_v<T, HatPrim>) {
            prim.lo += a;
            prim.hi += a;
          } else {
            prim.origin += a;
          }
        },
        t.prim);
  }
  return CatalogFunction(std::move(out));
}

CatalogFunction CatalogFunction::modulated(double a) const {
  std::vector<Term> out = terms_;
  for (Term& t : out)
    std::visit([&](auto& prim) { prim.freq += a; }, t.prim);
  return CatalogFunction(std::move(out));
}

CatalogFunction CatalogFunction::reflected() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    std::visit(
        [&](auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            prim.center = -prim.center;
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            for (std::size_t n = 1; n < prim.coeffs.size(); n += 2)
              prim.coeffs[n] = -prim.coeffs[n];
            prim.center = -prim.center;
          } else if constexpr (std::is_same_v<T, IndicatorPrim> ||
                               std::is_same_v<T, HatPrim>) {
            const double lo = -prim.hi, hi = -prim.lo;
            prim.lo = lo;
            prim.hi = hi;
          } else {
            prim.origin = -prim.origin;
            prim.side = -prim.side;
          }
          prim.freq = -prim.freq;
        },
        t.prim);
  }
  return CatalogFunction(std::move(out));
}

CatalogFunction CatalogFunction::dilated(double a, double b) const {
  if (a == 0) throw precondition_error("dilate: scale must be nonzero");
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    std::visit(
        [&](auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          t.coeff *= cis(prim.freq * b);
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            prim.center = (prim.center - b) / a;
            prim.a *= a * a;
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            double scale = 1;
            for (std::size_t n = 0; n < prim.coeffs.size(); ++n) {
              prim.coeffs[n] *= scale;
              scale *= a;
            }
            prim.center = (prim.center - b) / a;
            prim.a *= a * a;
          } else if constexpr (std::is_same_v<T, IndicatorPrim> ||
                               std::is_same_v<T, HatPrim>) {
            double e1 = (prim.lo - b) / a, e2 = (prim.hi - b) / a;
            prim.lo = std::min(e1, e2);
            prim.hi = std::max(e1, e2);
          } else {
            t.coeff *= std::pow(std::abs(a), -prim.alpha);
            prim.origin = (prim.origin - b) / a;
            prim.cutoff /= std::abs(a);
            prim.side = a > 0 ? prim.side : -prim.side;
          }
          prim.freq *= a;
        },
        t.prim);
  }
  return CatalogFunction(std::move(out));
}

CatalogFunction CatalogFunction::scaled(cplx c) const {
  if (c == cplx(0)) return CatalogFunction();
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff *= c;
  return CatalogFunction(std::move(out));
}

CatalogFunction operator+(const CatalogFunction& f, const CatalogFunction& g) {
  std::vector<CatalogFunction::Term> out = f.terms_;
  out.insert(out.end(), g.terms_.begin(), g.terms_.end());
  return CatalogFunction(std::move(out));
}

CatalogFunction operator-(const CatalogFunction& f, const CatalogFunction& g) {
  return f + g.scaled(cplx(-1));
}

DecayProfile CatalogFunction::decay() const {
  std::vector<TailPart> parts;
  for (const Term& t : terms_) parts.push_back(term_decay(t));
  if (parts.empty()) parts.push_back(TailPart::compact(0));
  return DecayProfile(std::move(parts));
}

DecayProfile CatalogFunction::derivative_decay() const {
  std::vector<TailPart> parts;
  for (const Term& t : terms_) {
    const double mag = std::abs(t.coeff);
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            std::vector<cplx> dcoef{cplx(0, prim.freq), cplx(-2 * prim.a)};
            const double amp = poly_gauss_amp(dcoef, prim.a);
            const double shift = std::exp(0.5 * prim.a * prim.center * prim.center);
            parts.push_back(TailPart::gauss(mag * amp * shift, 0.25 * prim.a));
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            auto q = poly_axpy(cplx(0, prim.freq), prim.coeffs,
                               poly_derivative(prim.coeffs));
            q = poly_axpy(cplx(-2 * prim.a), poly_shift_up(prim.coeffs), q);
            const double amp = poly_gauss_amp(q, prim.a);
            const double shift = std::exp(0.5 * prim.a * prim.center * prim.center);
            parts.push_back(TailPart::gauss(mag * amp * shift, 0.25 * prim.a));
          } else if constexpr (std::is_same_v<T, IndicatorPrim> ||
                               std::is_same_v<T, HatPrim>) {
            parts.push_back(
                TailPart::compact(std::max(std::abs(prim.lo), std::abs(prim.hi))));
          } else {
            const double thr =
                std::max(1.0, 2.0 * std::abs(prim.origin) + prim.cutoff);
            const double amp =
                mag * (prim.alpha * std::pow(2.0, prim.alpha + 1) +
                       std::abs(prim.freq) * std::pow(2.0, prim.alpha));
            const double alpha =
                prim.freq != 0 ? prim.alpha : prim.alpha + 1;
            parts.push_back(TailPart::power(amp, alpha, thr));
          }
        },
        t.prim);
  }
  if (parts.empty()) parts.push_back(TailPart::compact(0));
  return DecayProfile(std::move(parts));
}

std::vector<double> CatalogFunction::breakpoints() const {
  std::vector<double> bp;
  for (const Term& t : terms_) {
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, IndicatorPrim>) {
            bp.push_back(prim.lo);
            bp.push_back(prim.hi);
          } else if constexpr (std::is_same_v<T, HatPrim>) {
            bp.push_back(prim.lo);
            bp.push_back(0.5 * (prim.lo + prim.hi));
            bp.push_back(prim.hi);
          } else if constexpr (std::is_same_v<T, PowerTailPrim>) {
            bp.push_back(prim.origin + prim.side * prim.cutoff);
          }
        },
        t.prim);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  return bp;
}

std::vector<double> CatalogFunction::peak_candidates() const {
  std::vector<double> pts = breakpoints();
  for (const Term& t : terms_) {
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            pts.push_back(prim.center);
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            const double w = 1.0 / std::sqrt(prim.a);
            for (int j = -3; j <= 3; ++j) pts.push_back(prim.center + j * w);
          } else if constexpr (std::is_same_v<T, HatPrim>) {
            pts.push_back(0.5 * (prim.lo + prim.hi));
          } else if constexpr (std::is_same_v<T, IndicatorPrim>) {
            pts.push_back(0.5 * (prim.lo + prim.hi));
          } else {
            pts.push_back(prim.origin + prim.side * prim.cutoff * (1 + 1e-12));
          }
        },
        t.prim);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

cplx CatalogFunction::derivative_at(double x) const {
  cplx v = 0;
  for (const Term& t : terms_) {
    const cplx base = std::visit(Evaluator{x}, t.prim);
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            const double u = x - prim.center;
            v += t.coeff * base * cplx(-2 * prim.a * u, prim.freq);
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            const double u = x - prim.center;
            const cplx p = poly_eval(prim.coeffs, cplx(u));
            const cplx dp = poly_eval(poly_derivative(prim.coeffs), cplx(u));
            const cplx env = std::exp(-prim.a * u * u) * cis(prim.freq * x);
            v += t.coeff * env * (dp + p * cplx(-2 * prim.a * u, prim.freq));
          } else if constexpr (std::is_same_v<T, IndicatorPrim>) {
            v += t.coeff * base * cplx(0, prim.freq);
          } else if constexpr (std::is_same_v<T, HatPrim>) {
            const double m = 0.5 * (prim.lo + prim.hi);
            const double half = 0.5 * (prim.hi - prim.lo);
            double slope = 0;
            if (x > prim.lo && x < m)
              slope = 1.0 / half;
            else if (x > m && x < prim.hi)
              slope = -1.0 / half;
            v += t.coeff * (slope * cis(prim.freq * x) + base * cplx(0, prim.freq));
          } else {
            if (power_tail_support(prim, x)) {
              const double u = prim.side * (x - prim.origin);
              const cplx dpow = -prim.alpha * prim.side *
                                std::pow(u, -prim.alpha - 1) * cis(prim.freq * x);
              v += t.coeff * (dpow + base * cplx(0, prim.freq));
            }
          }
        },
        t.prim);
  }
  return v;
}

cplx CatalogFunction::second_derivative_at(double x) const {
  cplx v = 0;
  for (const Term& t : terms_) {
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          const double w = prim.freq;
          // for f = s(x) e^{iwx}: f'' = (s'' + 2iw s' - w^2 s) e^{iwx}
          double s = 0, ds = 0, d2s = 0;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            const double u = x - prim.center;
            const double env = std::exp(-prim.a * u * u);
            s = env;
            ds = -2 * prim.a * u * env;
            d2s = (4 * prim.a * prim.a * u * u - 2 * prim.a) * env;
            v += t.coeff * cis(w * x) *
                 (cplx(d2s) + cplx(0, 2 * w) * ds + cplx(-w * w) * s);
            return;
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            const double u = x - prim.center;
            const double env = std::exp(-prim.a * u * u);
            const auto dp = poly_derivative(prim.coeffs);
            const auto d2p = poly_derivative(dp);
            const cplx pv = poly_eval(prim.coeffs, cplx(u));
            const cplx dpv = poly_eval(dp, cplx(u));
            const cplx d2pv = poly_eval(d2p, cplx(u));
            const cplx sv = pv * env;
            const cplx dsv = (dpv - 2 * prim.a * u * pv) * env;
            const cplx d2sv = (d2pv - 4 * prim.a * u * dpv +
                               (4 * prim.a * prim.a * u * u - 2 * prim.a) * pv) *
                              env;
            v += t.coeff * cis(w * x) *
                 (d2sv + cplx(0, 2 * w) * dsv + cplx(-w * w) * sv);
            return;
          } else if constexpr (std::is_same_v<T, IndicatorPrim>) {
            s = (x >= prim.lo && x < prim.hi) ? 1.0 : 0.0;
          } else if constexpr (std::is_same_v<T, HatPrim>) {
            s = hat_value(prim, x);
            const double m = 0.5 * (prim.lo + prim.hi);
            const double half = 0.5 * (prim.hi - prim.lo);
            if (x > prim.lo && x < m)
              ds = 1.0 / half;
            else if (x > m && x < prim.hi)
              ds = -1.0 / half;
          } else {
            static_assert(std::is_same_v<T, PowerTailPrim>);
            if (power_tail_support(prim, x)) {
              const double u = prim.side * (x - prim.origin);
              s = std::pow(u, -prim.alpha);
              ds = -prim.alpha * prim.side * std::pow(u, -prim.alpha - 1);
              d2s = prim.alpha * (prim.alpha + 1) * std::pow(u, -prim.alpha - 2);
            }
          }
          v += t.coeff * cis(w * x) *
               (cplx(d2s) + cplx(0, 2 * w) * ds + cplx(-w * w) * s);
        },
        t.prim);
  }
  return v;
}

DecayProfile CatalogFunction::second_derivative_decay() const {
  std::vector<TailPart> parts;
  for (const Term& t : terms_) {
    const double mag = std::abs(t.coeff);
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim> ||
                        std::is_same_v<T, PolyGaussianPrim>) {
            double a, c;
            std::vector<cplx> coeffs;
            if constexpr (std::is_same_v<T, GaussianPrim>) {
              a = prim.a;
              c = prim.center;
              coeffs = {cplx(1)};
            } else {
              a = prim.a;
              c = prim.center;
              coeffs = prim.coeffs;
            }
            // coarse envelope: degree rises by 2, amp by poly bound
            auto d1 = poly_axpy(cplx(0, prim.freq), coeffs, poly_derivative(coeffs));
            d1 = poly_axpy(cplx(-2 * a), poly_shift_up(coeffs), d1);
            auto d2 = poly_axpy(cplx(0, prim.freq), d1, poly_derivative(d1));
            d2 = poly_axpy(cplx(-2 * a), poly_shift_up(d1), d2);
            const double amp = poly_gauss_amp(d2, a);
            const double shift = std::exp(0.5 * a * c * c);
            parts.push_back(TailPart::gauss(mag * amp * shift, 0.25 * a));
          } else if constexpr (std::is_same_v<T, IndicatorPrim> ||
                               std::is_same_v<T, HatPrim>) {
            parts.push_back(
                TailPart::compact(std::max(std::abs(prim.lo), std::abs(prim.hi))));
          } else {
            const double thr =
                std::max(1.0, 2.0 * std::abs(prim.origin) + prim.cutoff);
            const double w = std::abs(prim.freq);
            const double al = prim.alpha;
            const double amp =
                mag * std::pow(2.0, al + 2) * (al * (al + 1) + 2 * w * al + w * w);
            parts.push_back(TailPart::power(amp, w != 0 ? al : al + 2, thr));
          }
        },
        t.prim);
  }
  if (parts.empty()) parts.push_back(TailPart::compact(0));
  return DecayProfile(std::move(parts));
}

std::optional<CatalogFunction> CatalogFunction::derivative() const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    bool ok = true;
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            out.push_back({t.coeff,
                           PolyGaussianPrim{{cplx(0, prim.freq), cplx(-2 * prim.a)},
                                            prim.a, prim.center, prim.freq}});
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            auto q = poly_axpy(cplx(0, prim.freq), prim.coeffs,
                               poly_derivative(prim.coeffs));
            q = poly_axpy(cplx(-2 * prim.a), poly_shift_up(prim.coeffs), q);
            out.push_back(
                {t.coeff, PolyGaussianPrim{q, prim.a, prim.center, prim.freq}});
          } else if constexpr (std::is_same_v<T, HatPrim>) {
            const double m = 0.5 * (prim.lo + prim.hi);
            const double half = 0.5 * (prim.hi - prim.lo);
            out.push_back(
                {t.coeff / half, IndicatorPrim{prim.lo, m, prim.freq}});
            out.push_back(
                {-t.coeff / half, IndicatorPrim{m, prim.hi, prim.freq}});
            if (prim.freq != 0)
              out.push_back({t.coeff * cplx(0, prim.freq), prim});
          } else {
            ok = false;  // derivative would contain a point mass
          }
        },
        t.prim);
    if (!ok) return std::nullopt;
  }
  return CatalogFunction(std::move(out));
}

double CatalogFunction::jump_at(double x) const {
  cplx j = 0;
  for (const Term& t : terms_) {
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, IndicatorPrim>) {
            if (x == prim.lo) j += t.coeff * cis(prim.freq * x);
            if (x == prim.hi) j -= t.coeff * cis(prim.freq * x);
          } else if constexpr (std::is_same_v<T, PowerTailPrim>) {
            const double edge = prim.origin + prim.side * prim.cutoff;
            if (x == edge) {
              const cplx lim =
                  std::pow(prim.cutoff, -prim.alpha) * cis(prim.freq * x);
              j += (prim.side > 0 ? t.coeff * lim : -t.coeff * lim);
            }
          }
        },
        t.prim);
  }
  return j.real();
}

bool CatalogFunction::is_l1() const {
  for (const Term& t : terms_) {
    if (const auto* p = std::get_if<PowerTailPrim>(&t.prim)) {
      if (p->alpha <= 1.0) return false;
    }
  }
  return true;
}

double CatalogFunction::l1_norm_bound(double tol) const {
  if (!is_l1()) return kInf;
  if (terms_.empty()) return 0;
  Integrand h;
  const CatalogFunction& self = *this;
  h.f = [&self](double x) { return cplx(std::abs(self(x)), 0.0); };
  h.breakpoints = breakpoints();
  QuadratureResult r = integrate_improper(h, decay(), tol);
  if (!r.converged) return kInf;
  return r.value.real() + r.error_estimate;
}

double CatalogFunction::sup_bound() const {
  double s = 0;
  for (const Term& t : terms_) {
    const double mag = std::abs(t.coeff);
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim> ||
                        std::is_same_v<T, IndicatorPrim> ||
                        std::is_same_v<T, HatPrim>) {
            s += mag;
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            // |P(u)| e^{-au^2} <= amp e^{-(a/2)u^2} <= amp
            s += mag * poly_gauss_amp(prim.coeffs, prim.a);
          } else {
            s += mag * std::pow(prim.cutoff, -prim.alpha);
          }
        },
        t.prim);
  }
  return s;
}

SchwartzFunction::SchwartzFunction(CatalogFunction f) : f_(std::move(f)) {
  for (const auto& t : f_.terms()) {
    if (!std::holds_alternative<GaussianPrim>(t.prim) &&
        !std::holds_alternative<PolyGaussianPrim>(t.prim))
      throw precondition_error(
          "schwartz: only gaussian / poly-gaussian terms are admitted");
  }
  auto d = f_.derivative();
  df_ = *d;

  // Closed-form transform, term by term; the transform of a poly-gaussian is
  // again a poly-gaussian via M_{n+1}(v) = i dM_n/dv, M_n = Q_n(v) e^{-v^2/4a}.
  std::vector<CatalogFunction::Term> ft_terms;
  for (const auto& t : f_.terms()) {
    double a, c, w;
    std::vector<cplx> coeffs;
    if (const auto* g = std::get_if<GaussianPrim>(&t.prim)) {
      a = g->a;
      c = g->center;
      w = g->freq;
      coeffs = {cplx(1)};
    } else {
      const auto& pg = std::get<PolyGaussianPrim>(t.prim);
      a = pg.a;
      c = pg.center;
      w = pg.freq;
      coeffs = pg.coeffs;
    }
    std::vector<std::vector<cplx>> q;
    q.push_back({cplx(std::sqrt(kPi / a))});
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
      // Q_{n} = i (Q_{n-1}' - v Q_{n-1} / (2a))
      auto d1 = poly_derivative(q.back());
      auto res = poly_axpy(cplx(-1.0 / (2 * a)), poly_shift_up(q.back()), d1);
      for (auto& cc : res) cc *= cplx(0, 1);
      q.push_back(std::move(res));
    }
    std::vector<cplx> r;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      r = poly_axpy(coeffs[n], q[n], r);
    ft_terms.push_back(
        {t.coeff * cis(c * w), PolyGaussianPrim{r, 1.0 / (4 * a), w, -c}});
  }
  ft_ = CatalogFunction(std::move(ft_terms));
}

SchwartzFunction SchwartzFunction::gaussian(double a, double center, double freq) {
  return SchwartzFunction(CatalogFunction::gaussian(a, center, freq));
}

SchwartzFunction SchwartzFunction::poly_gaussian(std::vector<cplx> coeffs, double a,
                                                 double center, double freq) {
  return SchwartzFunction(
      CatalogFunction::poly_gaussian(std::move(coeffs), a, center, freq));
}

std::optional<cplx> classical_ft_closed_form(const CatalogFunction& f, double s) {
  cplx total = 0;
  for (const auto& t : f.terms()) {
    bool ok = true;
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, GaussianPrim>) {
            const double v = s - prim.freq;
            total += t.coeff * cis(-v * prim.center) * std::sqrt(kPi / prim.a) *
                     std::exp(-v * v / (4 * prim.a));
          } else if constexpr (std::is_same_v<T, PolyGaussianPrim>) {
            const double v = s - prim.freq;
            std::vector<std::vector<cplx>> q;
            q.push_back({cplx(std::sqrt(kPi / prim.a))});
            for (std::size_t n = 1; n < prim.coeffs.size(); ++n) {
              auto d1 = poly_derivative(q.back());
              auto res =
                  poly_axpy(cplx(-1.0 / (2 * prim.a)), poly_shift_up(q.back()), d1);
              for (auto& cc : res) cc *= cplx(0, 1);
              q.push_back(std::move(res));
            }
            cplx m = 0;
            for (std::size_t n = 0; n < prim.coeffs.size(); ++n)
              m += prim.coeffs[n] * poly_eval(q[n], cplx(v));
            total += t.coeff * cis(-v * prim.center) * m *
                     std::exp(-v * v / (4 * prim.a));
          } else if constexpr (std::is_same_v<T, IndicatorPrim>) {
            const double v = s - prim.freq;
            const double m = 0.5 * (prim.lo + prim.hi);
            const double len = prim.hi - prim.lo;
            total += t.coeff * cis(-v * m) * len * sinc(0.5 * v * len);
          } else if constexpr (std::is_same_v<T, HatPrim>) {
            const double v = s - prim.freq;
            const double m = 0.5 * (prim.lo + prim.hi);
            const double half = 0.5 * (prim.hi - prim.lo);
            const double sc = sinc(0.5 * v * half);
            total += t.coeff * cis(-v * m) * half * sc * sc;
          } else {
            ok = false;
          }
        },
        t.prim);
    if (!ok) return std::nullopt;
  }
  return total;
}

cplx SampledFunction::operator()(double t) const {
  if (x.empty()) return 0;
  if (t <= x.front() || t >= x.back()) return 0;
  auto it = std::upper_bound(x.begin(), x.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - x.begin());
  const double w = (t - x[i - 1]) / (x[i] - x[i - 1]);
  return value[i - 1] * (1.0 - w) + value[i] * w;
}

}  // namespace vexlp
