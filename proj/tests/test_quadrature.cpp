#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "vexlp/bv.hpp"
#include "vexlp/quadrature.hpp"

using namespace vexlp;

TEST_CASE("basic panels") {
  auto one = real_integrand([](double) { return 1.0; });
  CHECK(integrate(one, 0, 1, 1e-10).value.real() == doctest::Approx(1).epsilon(1e-12));

  auto sine = real_integrand([](double t) { return std::sin(t); });
  auto r = integrate(sine, 0, kPi, 1e-10);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(2).epsilon(1e-11));
  CHECK(r.error_estimate <= 1e-10);
}

TEST_CASE("dirichlet-type integral via the improper variant") {
  // \int_0^inf (sin y / y)^2 dy = pi/2; the envelope y^{-2} drives truncation.
  auto h = real_integrand([](double y) {
    const double s = y == 0 ? 1.0 : std::sin(y) / y;
    return s * s;
  });
  h.osc_freq = 2.0;
  auto r1 = integrate_upper(h, 0.0, [](double t) { return 1.0 / t; }, 2e-5);
  CHECK(r1.converged);
  CHECK(r1.value.real() == doctest::Approx(kPi / 2).epsilon(4e-5));
  // two truncation radii: tighter tolerance moves the radius, value stable
  auto r2 = integrate_upper(h, 0.0, [](double t) { return 1.0 / t; }, 1e-5);
  CHECK(std::abs(r2.value.real() - kPi / 2) <= 2e-5);
}

TEST_CASE("gaussian over the line") {
  auto h = real_integrand([](double t) { return std::exp(-t * t); });
  auto r = integrate_improper(h, DecayProfile({TailPart::gauss(1, 1)}), 1e-10);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(kSqrtPi).epsilon(1e-11));
}

TEST_CASE("odd integrand cancels") {
  auto h = real_integrand([](double t) { return t * std::exp(-t * t); });
  auto r = integrate_improper(h, DecayProfile({TailPart::gauss(1, 0.9)}), 1e-10);
  CHECK(std::abs(r.value.real()) <= 1e-10);
}

TEST_CASE("power tail antiderivative") {
  auto h = real_integrand([](double t) { return std::pow(std::abs(t), -2.0); });
  auto r = integrate_upper(h, 1.0, [](double t) { return 1.0 / t; }, 1e-8);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-8));  // \int_1^inf t^-2
}

TEST_CASE("improper failure reports the required radius") {
  auto h = real_integrand([](double t) { return 1.0 / (1 + t * t); });
  auto r = integrate_improper(h, [](double) { return 1.0; }, 1e-9);
  CHECK(!r.converged);
  CHECK(r.required_radius > 0);
}

TEST_CASE("stieltjes against BV weights") {
  SUBCASE("constant integrand sees g(b) - g(a)") {
    auto g = BVFunction::step(0.25, 2.0);
    auto r = stieltjes([](double) { return cplx(1.0); }, g, 0, 1, 1e-12);
    CHECK(r.value.real() == doctest::Approx(2.0));
  }
  SUBCASE("point mass at 0.5") {
    auto g = BVFunction::step(0.5, 1.0);
    auto r = stieltjes([](double t) { return cplx(t); }, g, 0, 1, 1e-12);
    CHECK(r.value.real() == doctest::Approx(0.5));
  }
  SUBCASE("jump at the left endpoint is excluded, right endpoint included") {
    auto g = BVFunction::step(0.0, 1.0);
    auto r = stieltjes([](double t) { return cplx(t + 3); }, g, 0, 1, 1e-12);
    CHECK(r.value.real() == doctest::Approx(0.0));
    auto r2 = stieltjes([](double t) { return cplx(t + 3); }, g, -1, 0, 1e-12);
    CHECK(r2.value.real() == doctest::Approx(3.0));
  }
  SUBCASE("smooth weight t^2 on [0,1]") {
    auto g = BVFunction::monomial_window(2, 0, 1);
    auto r = stieltjes([](double t) { return cplx(t); }, g, 0, 1, 1e-12);
    CHECK(r.value.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  }
}

TEST_CASE("linearity and interval additivity") {
  auto f1 = [](double t) { return std::cos(3 * t); };
  auto f2 = [](double t) { return t * t; };
  const double al = 2.5, be = -1.25;
  auto combo = real_integrand([&](double t) { return al * f1(t) + be * f2(t); });
  auto i1 = integrate(real_integrand(f1), -1, 2, 1e-11).value.real();
  auto i2 = integrate(real_integrand(f2), -1, 2, 1e-11).value.real();
  auto ic = integrate(combo, -1, 2, 1e-11).value.real();
  CHECK(ic == doctest::Approx(al * i1 + be * i2).epsilon(1e-10));

  auto ia = integrate(combo, -1, 0.3, 1e-11).value.real();
  auto ib = integrate(combo, 0.3, 2, 1e-11).value.real();
  CHECK(ia + ib == doctest::Approx(ic).epsilon(1e-10));
}

TEST_CASE("stieltjes integration by parts on smooth weights") {
  // \int F dg + \int g dF = F(b)g(b) - F(a)g(a)
  auto g = BVFunction::monomial_window(2, 0.1, 0.95);
  auto f = BVFunction::monomial_window(3, 0.1, 0.95);
  const double a = 0.2, b = 0.9;
  auto ifdg = stieltjes([&f](double t) { return cplx(f(t)); }, g, a, b, 1e-12);
  auto igdf = stieltjes([&g](double t) { return cplx(g(t)); }, f, a, b, 1e-12);
  const double boundary = f(b) * g(b) - f(a) * g(a);
  CHECK(ifdg.value.real() + igdf.value.real() ==
        doctest::Approx(boundary).epsilon(1e-9));
}

TEST_CASE("oscillatory pre-splitting keeps the estimate honest") {
  const double s = 400.0;
  Integrand h;
  h.f = [s](double t) { return cplx(std::cos(s * t)); };
  h.osc_freq = s;
  auto r = integrate(h, 0, 1, 1e-10);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(std::sin(s) / s).epsilon(1e-9));
}
