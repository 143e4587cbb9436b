#include <cmath>

#include "doctest.h"
#include "vexlp/exponent.hpp"

using namespace vexlp;

namespace {

ExponentFunction mixed_1_2_inf() {
  // 1 on [-1, 0), 2 on [0, 1), inf elsewhere
  using F = ExponentFunction::Form;
  ExponentFunction::Piece a{{-kInf, -1}, F::Constant, kInf, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece b{{-1, 0}, F::Constant, 1, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece c{{0, 1}, F::Constant, 2, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece d{{1, kInf}, F::Constant, kInf, 1, 1, 1, 0, 2, false};
  return ExponentFunction({a, b, c, d});
}

ExponentFunction split_2_3() {
  using F = ExponentFunction::Form;
  ExponentFunction::Piece a{{-kInf, 0}, F::Constant, 2, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece b{{0, kInf}, F::Constant, 3, 1, 1, 1, 0, 2, false};
  return ExponentFunction({a, b});
}

}  // namespace

TEST_CASE("conjugate of constant exponents") {
  auto q2 = conjugate(ExponentFunction::constant(2));
  CHECK(q2(0.3) == doctest::Approx(2).epsilon(1e-15));

  auto qinf = conjugate(ExponentFunction::constant(1));
  CHECK(qinf(5.0) == kInf);

  auto q32 = conjugate(ExponentFunction::constant(3));
  CHECK(q32(-7.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(q32.p_minus() == doctest::Approx(1.5));
  CHECK(q32.p_plus() == doctest::Approx(1.5));
}

TEST_CASE("conjugate is an exact involution") {
  const auto ps = {ExponentFunction::constant(2.7), ExponentFunction::log_decay(0.8),
                   ExponentFunction::power_decay(1.5, 2.0), split_2_3(),
                   mixed_1_2_inf()};
  for (const auto& p : ps) {
    auto pp = conjugate(conjugate(p));
    for (double x = -40; x <= 40; x += 0.37) CHECK(pp(x) == p(x));
  }
}

TEST_CASE("symmetric duality identities") {
  for (const auto& p : {split_2_3(), ExponentFunction::log_decay(1.0),
                        mixed_1_2_inf(), ExponentFunction::constant(1.4)}) {
    auto q = conjugate(p);
    auto inv = [](double v) { return v == kInf ? 0.0 : 1.0 / v; };
    CHECK(inv(p.p_plus()) + inv(q.p_minus()) == doctest::Approx(1).epsilon(1e-12));
    CHECK(inv(p.p_minus()) + inv(q.p_plus()) == doctest::Approx(1).epsilon(1e-12));
  }
}

TEST_CASE("partition sets") {
  SUBCASE("constant 2") {
    auto sets = partition(ExponentFunction::constant(2));
    CHECK(sets.omega_star.measure() == kInf);
    CHECK(sets.omega_1.empty());
    CHECK(sets.omega_inf.empty());
  }
  SUBCASE("mixed 1/2/inf") {
    auto sets = partition(mixed_1_2_inf());
    CHECK(sets.omega_1.measure() == doctest::Approx(1));
    CHECK(sets.omega_star.measure() == doctest::Approx(1));
    CHECK(sets.omega_inf.measure() == kInf);
    CHECK(sets.omega_1.contains(-0.5));
    CHECK(sets.omega_star.contains(0.5));
    CHECK(sets.omega_inf.contains(7.0));
  }
  SUBCASE("power decay covers the line in omega_star") {
    auto sets = partition(ExponentFunction::power_decay(1, 1));
    CHECK(sets.omega_star.measure() == kInf);
    CHECK(sets.omega_1.empty());
    CHECK(sets.omega_inf.empty());
    auto p = ExponentFunction::power_decay(1, 1);
    CHECK(p(2.0) == doctest::Approx(1.5));
  }
}

TEST_CASE("delta indicator") {
  CHECK(delta_indicator(IntervalSet::empty_set()) == 0);
  CHECK(delta_indicator(IntervalSet({{0, 1}})) == 1);
  CHECK(delta_indicator(IntervalSet({{0.5, 0.5}})) == 0);
}

TEST_CASE("holder constant") {
  CHECK(holder_constant(ExponentFunction::constant(2)) == doctest::Approx(1));
  CHECK(holder_constant(ExponentFunction::constant(1)) == doctest::Approx(1));
  CHECK(holder_constant(ExponentFunction::constant(kInf)) == doctest::Approx(1));
  CHECK(holder_constant(mixed_1_2_inf()) == doctest::Approx(4));
  // K >= 1 always, = 1 on constants
  for (double c : {1.0, 1.5, 2.0, 3.0, 10.0})
    CHECK(holder_constant(ExponentFunction::constant(c)) == doctest::Approx(1));
  CHECK(holder_constant(split_2_3()) >= 1.0);
  CHECK(holder_constant(ExponentFunction::log_decay(1)) >= 1.0);
}

TEST_CASE("essential bounds") {
  auto [lo3, hi3] = essential_bounds(ExponentFunction::constant(3));
  CHECK(lo3 == 3);
  CHECK(hi3 == 3);

  auto [lo, hi] = essential_bounds(split_2_3());
  CHECK(lo == 2);
  CHECK(hi == 3);

  auto [llo, lhi] = essential_bounds(ExponentFunction::log_decay(1));
  CHECK(llo == doctest::Approx(1));
  CHECK(lhi == doctest::Approx(2));  // 1 + 1/log(e) at x = 0

  auto [plo, phi] = essential_bounds(ExponentFunction::power_decay(1, 1));
  CHECK(plo == doctest::Approx(1));
  CHECK(phi == kInf);
}

TEST_CASE("lh1 witnesses") {
  SUBCASE("log decay") {
    auto w = check_lh1(ExponentFunction::log_decay(1));
    REQUIRE(w.has_value());
    CHECK(w->kappa == doctest::Approx(1));
    CHECK(w->m == doctest::Approx(kEulerE));
  }
  SUBCASE("constant 2 fails") {
    CHECK(!check_lh1(ExponentFunction::constant(2)).has_value());
  }
  SUBCASE("power decay") {
    auto w = check_lh1(ExponentFunction::power_decay(1, 1));
    REQUIRE(w.has_value());
    CHECK(w->kappa == doctest::Approx(1));
    CHECK(w->m == doctest::Approx(kEulerE));
  }
  SUBCASE("witness inequality on a dense tail sample") {
    for (const auto& p :
         {ExponentFunction::log_decay(0.5), ExponentFunction::power_decay(2, 0.5)}) {
      auto w = check_lh1(p);
      REQUIRE(w.has_value());
      for (int i = 0; i <= 300; ++i) {
        const double x =
            w->m * std::pow(1e6 / w->m, static_cast<double>(i) / 300.0) *
            (1 + 1e-9);
        const double tau = 1.0 / (p(x) - 1.0);
        CHECK(tau >= w->kappa * std::log(x) * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("exponent evaluation and breakpoints") {
  auto p = split_2_3();
  CHECK(p(-1e-9) == 2);
  CHECK(p(0.0) == 3);
  CHECK(p.breakpoints().size() == 1);

  auto pd = ExponentFunction::power_decay(1, 1);
  CHECK(pd(0.0) == kInf);  // single null point
  CHECK(pd.breakpoints().size() == 1);
  CHECK(pd.tail_p_minus(10.0) == doctest::Approx(1.0));
}

TEST_CASE("invalid exponents are rejected") {
  using F = ExponentFunction::Form;
  CHECK_THROWS_AS(ExponentFunction::constant(0.5), precondition_error);
  CHECK_THROWS_AS(ExponentFunction::log_decay(0), precondition_error);
  ExponentFunction::Piece gap1{{-kInf, 0}, F::Constant, 2, 1, 1, 1, 0, 2, false};
  ExponentFunction::Piece gap2{{1, kInf}, F::Constant, 2, 1, 1, 1, 0, 2, false};
  CHECK_THROWS_AS(ExponentFunction({gap1, gap2}), precondition_error);
}
