#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "vexlp/modular.hpp"

using namespace vexlp;

namespace {

ExponentFunction split(double left, double right, double at = 0) {
  using F = ExponentFunction::Form;
  ExponentFunction::Piece a{{-kInf, at}, F::Constant, left, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece b{{at, kInf}, F::Constant, right, 1, 1, 1, 0, 2, false};
  return ExponentFunction({a, b});
}

ExponentFunction mixed_1_2_inf() {
  using F = ExponentFunction::Form;
  ExponentFunction::Piece a{{-kInf, -1}, F::Constant, kInf, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece b{{-1, 0}, F::Constant, 1, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece c{{0, 1}, F::Constant, 2, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece d{{1, kInf}, F::Constant, kInf, 1, 1, 1, 0, 2, false};
  return ExponentFunction({a, b, c, d});
}

}  // namespace

TEST_CASE("modular closed cases") {
  const auto line = IntervalSet::whole_line();
  auto f = CatalogFunction::indicator(0, 1);
  auto p2 = ExponentFunction::constant(2);

  auto m1 = modular(f, p2, line, 1.0);
  CHECK(m1.total == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(m1.esssup_part == 0.0);

  auto m2 = modular(f.scaled(2.0), p2, line, 1.0);
  CHECK(m2.total == doctest::Approx(4.0).epsilon(1e-9));

  auto pinf = ExponentFunction::constant(kInf);
  auto m3 = modular(f, pinf, line, 2.0);
  CHECK(m3.lebesgue_part == 0.0);
  CHECK(m3.total == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("modular is monotone in lambda") {
  auto f = CatalogFunction::gaussian(1, 0.3, 0) + CatalogFunction::hat(-1, 0.5);
  auto p = split(2, 3);
  const auto line = IntervalSet::whole_line();
  double prev = kInf;
  for (double lam : {0.5, 0.8, 1.0, 1.5, 2.5, 4.0}) {
    const double cur = modular(f, p, line, lam).total;
    CHECK(cur <= prev * (1 + 1e-9));
    prev = cur;
  }
}

TEST_CASE("modular divergence is a value, not an error") {
  // power tail with alpha * p too small over an unbounded region
  auto f = CatalogFunction::power_tail(0.4, 1);
  auto p = ExponentFunction::constant(2);  // alpha p = 0.8 < 1: divergent
  auto m = modular(f, p, IntervalSet::whole_line(), 1.0);
  CHECK(m.total == kInf);
}

TEST_CASE("luxemburg norm closed cases") {
  auto p2 = ExponentFunction::constant(2);
  SUBCASE("scaled indicator has norm = scale") {
    for (double c : {0.5, 1.0, 2.0, 10.0}) {
      auto res = luxemburg_norm(CatalogFunction::indicator(0, 1).scaled(c), p2);
      CHECK(res.value == doctest::Approx(c).epsilon(1e-7));
    }
  }
  SUBCASE("gaussian in L2") {
    auto res = luxemburg_norm(CatalogFunction::gaussian(1), p2);
    CHECK(res.value == doctest::Approx(1.119515134920248).epsilon(1e-7));
  }
  SUBCASE("two-exponent split gives the plastic number") {
    auto res = luxemburg_norm(CatalogFunction::indicator(-1, 1), split(2, 3));
    CHECK(res.value == doctest::Approx(1.324717957244747).epsilon(1e-6));
  }
  SUBCASE("exponent with an essential-sup region") {
    // rho(f/l) = 1/l + 1/l^2 = 1 at the golden ratio
    auto res = luxemburg_norm(CatalogFunction::indicator(-1, 1), mixed_1_2_inf());
    CHECK(res.value == doctest::Approx(1.618033988749893).epsilon(1e-6));
  }
  SUBCASE("pure sup norm") {
    auto res = luxemburg_norm(CatalogFunction::indicator(0, 1).scaled(3.0),
                              ExponentFunction::constant(kInf));
    CHECK(res.value == doctest::Approx(3.0).epsilon(1e-7));
  }
  SUBCASE("zero function") {
    CHECK(luxemburg_norm(CatalogFunction(), p2).value == 0.0);
  }
}

TEST_CASE("unit ball property at the returned value") {
  auto f = CatalogFunction::gaussian(2, -0.4, 0).scaled(cplx(1.7, 0.4)) +
           CatalogFunction::indicator(0, 2);
  for (const auto& p : {ExponentFunction::constant(1.5), split(2, 3),
                        ExponentFunction::log_decay(1.0)}) {
    auto res = luxemburg_norm(f, p, 1e-8);
    REQUIRE(res.finite);
    CHECK(res.modular_at_value <= 1.0 + 1e-7);
    auto below = modular(f, p, IntervalSet::whole_line(),
                         res.value * (1 - 1e-7 * 10), 1e-10);
    CHECK(below.total >= 1.0 - 1e-6);
    CHECK(res.bracket_lo <= res.value);
    CHECK(res.bracket_hi - res.bracket_lo <= 1e-8 * res.bracket_hi * 1.01);
  }
}

TEST_CASE("homogeneity") {
  auto f = CatalogFunction::hat(-0.5, 1.5);
  auto p = split(1.5, 2.5);
  const double base = luxemburg_norm(f, p).value;
  for (double c : {0.5, 2.0, 10.0}) {
    CHECK(luxemburg_norm(f.scaled(c), p).value ==
          doctest::Approx(c * base).epsilon(2e-7));
  }
}

TEST_CASE("constant-exponent reduction against the oracle") {
  const auto fs = {CatalogFunction::gaussian(1),
                   CatalogFunction::gaussian(0.5, 1.0, 0).scaled(cplx(0, 1.5)),
                   CatalogFunction::indicator(-1, 2),
                   CatalogFunction::hat(-2, 0),
                   CatalogFunction::power_tail(2, 1)};
  for (double c : {1.5, 2.0, 3.0}) {
    auto p = ExponentFunction::constant(c);
    for (const auto& f : fs) {
      const double direct =
          std::pow(oracle::simpson_real(
                       [&](double x) { return std::pow(std::abs(f(x)), c); },
                       -60, 60, 1e-12),
                   1.0 / c);
      CHECK(luxemburg_norm(f, p).value == doctest::Approx(direct).epsilon(1e-6));
    }
  }
}

TEST_CASE("norm with log-decay exponent stays bracketed") {
  auto res = luxemburg_norm(CatalogFunction::gaussian(1), ExponentFunction::log_decay(1));
  REQUIRE(res.finite);
  CHECK(res.modular_at_value <= 1 + 1e-7);
  CHECK(res.value > 0.5);
  CHECK(res.value < 3.0);
}

TEST_CASE("norm under the power-decay exponent hits the modular wall") {
  // For p(x) = 1 + 1/|x| the modular of the unit gaussian jumps to
  // infinity for every lambda < 1 and stays <= 1 at lambda = 1.
  auto p = ExponentFunction::power_decay(1, 1);
  auto f = CatalogFunction::gaussian(1);
  CHECK(modular(f, p, IntervalSet::whole_line(), 0.9).total == kInf);
  CHECK(modular(f, p, IntervalSet::whole_line(), 1.0).total <= 1.0);
  auto res = luxemburg_norm(f, p, 1e-7);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("holder check") {
  auto p2 = ExponentFunction::constant(2);
  SUBCASE("cauchy-schwarz equality case") {
    auto f = CatalogFunction::indicator(0, 1);
    auto rep = holder_check(f, f, p2);
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rep.rhs == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("disjoint supports") {
    auto rep = holder_check(CatalogFunction::indicator(0, 1),
                            CatalogFunction::indicator(2, 3), p2);
    CHECK(rep.pass);
    CHECK(rep.lhs <= 1e-12);
  }
  SUBCASE("gaussian pair achieves equality") {
    auto g = CatalogFunction::gaussian(1);
    auto rep = holder_check(g, g, p2);
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(1.253314137315500).epsilon(1e-8));
    CHECK(rep.rhs == doctest::Approx(1.253314137315500).epsilon(1e-6));
  }
  SUBCASE("mixed exponent with all three regions") {
    auto rep = holder_check(CatalogFunction::gaussian(1),
                            CatalogFunction::hat(-2, 2), mixed_1_2_inf());
    CHECK(!rep.skipped);
    CHECK(rep.pass);
    CHECK(rep.k == doctest::Approx(4.0));
  }
}

TEST_CASE("sup_abs sees peaks and tails") {
  auto f = as_density(CatalogFunction::gaussian(1, 3, 0).scaled(2.0));
  CHECK(sup_abs(f, IntervalSet::whole_line()) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sup_abs(f, IntervalSet({{4, kInf}})) ==
        doctest::Approx(2 * std::exp(-1.0)).epsilon(1e-6));
}
