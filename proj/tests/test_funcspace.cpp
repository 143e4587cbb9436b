#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "vexlp/bv.hpp"
#include "vexlp/funcspace.hpp"
#include "vexlp/special.hpp"

using namespace vexlp;

namespace {
const double kGrid[] = {-3.7, -2.0, -1.1, -0.5, 0.0, 0.3, 0.9, 1.6, 2.8, 4.1};

void check_pointwise_equal(const CatalogFunction& a, const CatalogFunction& b,
                           double tol = 1e-13) {
  for (double x : kGrid) CHECK(std::abs(a(x) - b(x)) <= tol);
}
}  // namespace

TEST_CASE("evaluation of primitives") {
  CHECK(CatalogFunction::gaussian(1)(0.0) == cplx(1.0));
  CHECK(CatalogFunction::indicator(0, 1)(2.0) == cplx(0.0));
  CHECK(CatalogFunction::power_tail(2, 1)(2.0).real() == doctest::Approx(0.25));
  CHECK(CatalogFunction::hat(0, 2)(1.0).real() == doctest::Approx(1.0));
  CHECK(CatalogFunction::hat(0, 2)(0.5).real() == doctest::Approx(0.5));
}

TEST_CASE("structural transforms stay in the catalog") {
  check_pointwise_equal(CatalogFunction::indicator(0, 1).translated(1),
                        CatalogFunction::indicator(1, 2));
  check_pointwise_equal(CatalogFunction::indicator(0, 1).reflected(),
                        CatalogFunction::indicator(-1, 0));
  check_pointwise_equal(CatalogFunction::gaussian(1).dilated(2, 0),
                        CatalogFunction::gaussian(4));

  auto f = CatalogFunction::gaussian(0.7, 0.3, 1.2) +
           CatalogFunction::indicator(-1, 0.5).scaled(cplx(0.5, -0.25));
  check_pointwise_equal(f.reflected().reflected(), f);
  check_pointwise_equal(f.translated(0.8).translated(-0.8), f);
  // dilation with a = -1, b = 0 is reflection
  check_pointwise_equal(f.dilated(-1, 0), f.reflected());
  for (double x : kGrid)
    CHECK(std::abs(f.modulated(2.2)(x) - cis(2.2 * x) * f(x)) <= 1e-14);
}

TEST_CASE("dilate rejects a = 0") {
  CHECK_THROWS_AS(CatalogFunction::gaussian(1).dilated(0, 1), precondition_error);
}

TEST_CASE("decay envelopes really bound the functions") {
  const auto fs = {CatalogFunction::gaussian(1.3, 0.4, 2.0),
                   CatalogFunction::power_tail(1.5, 1).translated(-0.7),
                   CatalogFunction::hat(-2, 1) +
                       CatalogFunction::gaussian(0.5, -1, 0).scaled(cplx(0, 2)),
                   *CatalogFunction::gaussian(2, 1, 3).derivative()};
  for (const auto& f : fs) {
    const DecayProfile d = f.decay();
    const double t0 = std::max(1.0, d.threshold());
    for (int i = 0; i <= 60; ++i) {
      const double mag = t0 * std::pow(50.0, i / 60.0);
      for (double x : {mag, -mag})
        CHECK(std::abs(f(x)) <= d.sup_beyond(std::abs(x)) * (1 + 1e-12) + 1e-300);
    }
  }
}

TEST_CASE("linear combinations carry the weakest decay") {
  auto combo = CatalogFunction::gaussian(1) + CatalogFunction::power_tail(2, 1);
  CHECK(combo.decay().classify() == DecayProfile::Class::Power);
  CHECK(combo.decay().weakest_power_alpha() == doctest::Approx(2.0));
  auto exp_only = CatalogFunction::gaussian(1) + CatalogFunction::gaussian(2, 1, 0);
  CHECK(exp_only.decay().classify() == DecayProfile::Class::Exponential);
  CHECK(CatalogFunction::hat(0, 1).decay().classify() ==
        DecayProfile::Class::Compact);
}

TEST_CASE("convolution values") {
  SUBCASE("gaussian * gaussian at 0") {
    // closed form e^{-x^2/2} sqrt(pi/2) at x = 0
    auto g = CatalogFunction::gaussian(1);
    CHECK(convolve_at(g, g, 0.0).real() ==
          doctest::Approx(1.253314137315500).epsilon(1e-9));
  }
  SUBCASE("indicator * indicator peaks at 1") {
    auto f = CatalogFunction::indicator(0, 1);
    CHECK(convolve_at(f, f, 1.0).real() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(convolve_at(f, f, 0.5).real() == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("approximate identity at a continuity point") {
    // narrow normalized gaussian: (eps sqrt(pi))^{-1} e^{-x^2/eps^2}
    const double eps = 0.02;
    auto mollifier =
        CatalogFunction::gaussian(1.0 / (eps * eps)).scaled(1.0 / (eps * kSqrtPi));
    auto f = CatalogFunction::hat(-1, 1);
    CHECK(convolve_at(f, mollifier, 0.3).real() ==
          doctest::Approx(f(0.3).real()).epsilon(2e-2));
  }
  SUBCASE("symmetry") {
    auto f = CatalogFunction::gaussian(1, 0.5, 0);
    auto g = CatalogFunction::hat(-1, 1);
    for (double x : {-0.7, 0.0, 1.3})
      CHECK(std::abs(convolve_at(f, g, x) - convolve_at(g, f, x)) <= 2e-9);
  }
  SUBCASE("non-integrable inputs are rejected") {
    auto bad = CatalogFunction::power_tail(0.8, 1);
    CHECK_THROWS_AS(convolve_at(bad, CatalogFunction::gaussian(1), 0.0),
                    precondition_error);
  }
}

TEST_CASE("total variation") {
  CHECK(total_variation(BVFunction::from_catalog(CatalogFunction::indicator(0, 1))) ==
        doctest::Approx(2.0));
  CHECK(total_variation(BVFunction::from_catalog(CatalogFunction::gaussian(1))) ==
        doctest::Approx(2.0).epsilon(1e-7));
  CHECK(total_variation(BVFunction::from_catalog(CatalogFunction::hat(0, 2))) ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("total variation is translate / reflect invariant") {
  auto f = CatalogFunction::hat(-1, 2) + CatalogFunction::indicator(0, 1).scaled(0.5);
  const double tv = total_variation(BVFunction::from_catalog(f));
  CHECK(total_variation(BVFunction::from_catalog(f.translated(1.7))) ==
        doctest::Approx(tv).epsilon(1e-8));
  CHECK(total_variation(BVFunction::from_catalog(f.reflected())) ==
        doctest::Approx(tv).epsilon(1e-8));
}

TEST_CASE("bv decomposition reproduces increments") {
  auto g = BVFunction::from_catalog(CatalogFunction::indicator(0, 1).scaled(2.0) +
                                    CatalogFunction::hat(-2, 2));
  // g(b) - g(a) = \int_a^b g' + sum of jumps in (a, b]
  for (auto [a, b] : {std::pair{-3.0, 0.5}, {-1.0, 2.5}, {0.2, 0.8}}) {
    auto smooth = stieltjes([](double) { return cplx(1.0); }, g, a, b, 1e-11);
    CHECK(smooth.value.real() == doctest::Approx(g(b) - g(a)).epsilon(1e-9));
  }
}

TEST_CASE("schwartz transform closed forms match quadrature") {
  auto phi = SchwartzFunction::poly_gaussian({cplx(0.5), cplx(0, 1), cplx(1)}, 1.3,
                                             0.4, 0.9);
  for (double s : {-2.3, 0.0, 0.7, 3.1}) {
    cplx direct = oracle::simpson(
        [&](double t) { return phi(t) * std::exp(cplx(0, -s * t)); }, -14, 14,
        1e-11);
    CHECK(std::abs(phi.transform()(s) - direct) <= 1e-9);
  }
  // derivative closed form vs centered difference
  auto d = phi.derivative();
  for (double x : {-1.0, 0.2, 1.7}) {
    const double h = 1e-5;
    cplx fd = (phi(x + h) - phi(x - h)) / (2 * h);
    CHECK(std::abs(d(x) - fd) <= 1e-8);
  }
  CHECK(SchwartzFunction::gaussian(1).transform()(0.0).real() ==
        doctest::Approx(kSqrtPi).epsilon(1e-13));
}

TEST_CASE("rapid decay of schwartz members") {
  auto phi = SchwartzFunction::poly_gaussian({cplx(1), cplx(2)}, 0.8, -0.3, 1.1);
  for (int k = 0; k <= 4; ++k) {
    double worst = 0;
    for (double x = 1; x <= 30; x += 0.5)
      worst = std::max(worst, std::pow(x, k) * std::abs(phi.function()(x)));
    CHECK(worst < 1e3);  // bounded |x|^k phi on the test grid
  }
}

TEST_CASE("classical transform closed form of the indicator") {
  auto f = CatalogFunction::indicator(-1, 1);
  auto v = classical_ft_closed_form(f, kPi);
  REQUIRE(v.has_value());
  CHECK(std::abs(*v - cplx(2 * std::sin(kPi) / kPi)) <= 1e-14);
  auto at2 = classical_ft_closed_form(f, 2.0);
  CHECK(at2->real() == doctest::Approx(2 * std::sin(2.0) / 2.0).epsilon(1e-13));
  CHECK(!classical_ft_closed_form(CatalogFunction::power_tail(2, 1), 1.0));
}

TEST_CASE("sampled import interpolates and vanishes outside the window") {
  SampledFunction s;
  s.x = {0, 1, 2};
  s.value = {cplx(0), cplx(2), cplx(0)};
  s.decay = DecayProfile::compact(2);
  CHECK(s(0.5).real() == doctest::Approx(1.0));
  CHECK(s(1.5).real() == doctest::Approx(1.0));
  CHECK(s(3.0) == cplx(0.0));
}
