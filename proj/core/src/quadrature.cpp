#include "vexlp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "vexlp/bv.hpp"

namespace vexlp {

namespace {

// 15-point Kronrod extension of 7-point Gauss (positive nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double err;
};

struct PanelCmp {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b, long& evals) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  cplx fv[15];
  const cplx fc = f(mid);
  evals += 15;

  cplx resg = kWg[3] * fc;
  cplx resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::abs(fc);

  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = f(mid - dx);
    const cplx f2 = f(mid + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }

  const cplx mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs(resk - resg) * std::abs(half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50)
    err = std::max(err, eps50 * resabs);

  return Panel{a, b, resk * half, err};
}

cplx kahan_sum_values(std::vector<Panel>& panels, double& err_total) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  cplx sum = 0, comp = 0;
  err_total = 0;
  for (const Panel& p : panels) {
    cplx y = p.value - comp;
    cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err_total += p.err;
  }
  return sum;
}

}  // namespace

QuadratureResult integrate(const Integrand& h, double a, double b, double tol,
                           const QuadratureOptions& opt) {
  QuadratureResult res;
  if (!(tol > 0)) throw precondition_error("integrate: tol must be > 0");
  if (!(b > a)) {
    if (a == b) return res;
    throw precondition_error("integrate: needs a <= b");
  }

  // Edges: endpoints, interior breakpoints, then oscillation-driven splits.
  std::vector<double> edges{a, b};
  for (double x : h.breakpoints)
    if (x > a && x < b) edges.push_back(x);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<double> refined;
  refined.push_back(edges.front());
  const double freq = std::abs(h.osc_freq);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    std::size_t n = 1;
    if (freq > 0) {
      const double periods = freq * (hi - lo) / (2.0 * kPi);
      if (periods > 1.0)
        n = static_cast<std::size_t>(
            std::min<double>(std::ceil(periods), 1.0 * opt.max_panels / 2));
    }
    for (std::size_t j = 1; j <= n; ++j)
      refined.push_back(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n));
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelCmp> queue;
  std::vector<Panel> done;
  double err_sum = 0;
  for (std::size_t i = 0; i + 1 < refined.size(); ++i) {
    Panel p = gk15(h.f, refined[i], refined[i + 1], res.evaluations);
    err_sum += p.err;
    queue.push(p);
  }

  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  const double min_width = opt.min_width_factor * scale;
  std::size_t panels = queue.size();

  while (err_sum > tol && !queue.empty() && panels < opt.max_panels) {
    Panel worst = queue.top();
    queue.pop();
    if (worst.b - worst.a <= min_width || !std::isfinite(worst.err)) {
      done.push_back(worst);
      continue;
    }
    err_sum -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(h.f, worst.a, mid, res.evaluations);
    Panel right = gk15(h.f, mid, worst.b, res.evaluations);
    err_sum += left.err + right.err;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  res.value = kahan_sum_values(done, res.error_estimate);
  res.converged = res.error_estimate <= tol && std::isfinite(res.error_estimate) &&
                  std::isfinite(std::abs(res.value));
  return res;
}

QuadratureResult integrate_upper(const Integrand& h, double a,
                                 const std::function<double(double)>& tail_bound,
                                 double tol, double t0,
                                 const QuadratureOptions& opt) {
  if (!(tol > 0)) throw precondition_error("integrate_upper: tol must be > 0");
  double t = std::max(t0, a + 1.0);
  constexpr double kMaxRadius = 1e13;
  while (tail_bound(t) > 0.5 * tol && t < kMaxRadius) t *= 2;
  const double tail = tail_bound(t);
  if (tail > 0.5 * tol) {
    QuadratureResult fail;
    fail.converged = false;
    fail.required_radius = t;
    fail.error_estimate = tail;
    return fail;
  }
  QuadratureResult inner = integrate(h, a, t, 0.5 * tol, opt);
  inner.error_estimate += tail;
  inner.converged = inner.converged && inner.error_estimate <= tol;
  return inner;
}

QuadratureResult integrate_improper(const Integrand& h,
                                    const std::function<double(double)>& tail_bound,
                                    double tol, double t0,
                                    const QuadratureOptions& opt) {
  if (!(tol > 0)) throw precondition_error("integrate_improper: tol must be > 0");
  double t = t0;
  for (double x : h.breakpoints) t = std::max(t, std::abs(x) + 1.0);
  constexpr double kMaxRadius = 1e13;
  while (tail_bound(t) > 0.5 * tol && t < kMaxRadius) t *= 2;
  const double tail = tail_bound(t);
  if (tail > 0.5 * tol) {
    QuadratureResult fail;
    fail.converged = false;
    fail.required_radius = t;
    fail.error_estimate = tail;
    return fail;
  }
  QuadratureResult inner = integrate(h, -t, t, 0.5 * tol, opt);
  inner.error_estimate += tail;
  inner.converged = inner.converged && inner.error_estimate <= tol;
  return inner;
}

QuadratureResult integrate_improper(const Integrand& h, const DecayProfile& decay,
                                    double tol, const QuadratureOptions& opt) {
  return integrate_improper(
      h, [&decay](double t) { return decay.tail_integral(t); }, tol, 16, opt);
}

QuadratureResult stieltjes(const std::function<cplx(double)>& f,
                           const BVFunction& g, double a, double b, double tol) {
  if (!(b >= a)) throw precondition_error("stieltjes: needs a <= b");
  QuadratureResult total;
  const auto& pieces = g.pieces();
  std::size_t active = 0;
  for (const auto& pc : pieces) {
    if (std::min(pc.domain.hi, b) > std::max(pc.domain.lo, a)) ++active;
  }
  const double tol_each = tol / static_cast<double>(std::max<std::size_t>(active, 1));
  for (const auto& pc : pieces) {
    const double lo = std::max(pc.domain.lo, a);
    const double hi = std::min(pc.domain.hi, b);
    if (!(hi > lo)) continue;
    Integrand h;
    h.f = [&f, &pc](double t) { return f(t) * pc.deriv(t); };
    h.breakpoints = pc.critical_points;
    QuadratureResult part = integrate(h, lo, hi, tol_each);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
    total.converged = total.converged && part.converged;
  }
  for (const auto& j : g.jumps()) {
    if (j.x > a && j.x <= b) total.value += f(j.x) * j.height;
  }
  return total;
}

}  // namespace vexlp
