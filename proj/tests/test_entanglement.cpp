#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luinv/entanglement.hpp"
#include "luinv/selftest.hpp"

using namespace luinv;

TEST_CASE("ppt detector") {
  const auto mixed = is_entangled_ppt(0.25 * Mat4c::Identity());
  CHECK_FALSE(mixed.entangled);
  CHECK(mixed.margin == doctest::Approx(1.0 / 256));

  const auto bell = is_entangled_ppt(werner(1.0));
  CHECK(bell.entangled);
  CHECK(bell.margin == doctest::Approx(-0.5 * 0.125));  // (-1/2)(1/2)^3

  CHECK(is_entangled_ppt(werner(0.5)).entangled);
  CHECK_FALSE(is_entangled_ppt(werner(0.2)).entangled);

  Mat4c invalid = Mat4c::Identity();  // trace 4
  CHECK_THROWS_AS(is_entangled_ppt(invalid), std::invalid_argument);
}

TEST_CASE("makhlin detector") {
  // Werner family reduces to 1 + 6w^4 - 8w^3 < 9w^4 + 6w^2, i.e. w > 1/3.
  for (double w : {0.0, 0.1, 0.3}) {
    StateParams p;
    p.C = -w * Mat3::Identity();
    CHECK_FALSE(is_entangled_makhlin(p).entangled);
  }
  for (double w : {0.35, 0.6, 1.0}) {
    StateParams p;
    p.C = -w * Mat3::Identity();
    const auto v = is_entangled_makhlin(p);
    CHECK(v.entangled);
    const double lhs = 1 + 6 * std::pow(w, 4) - 8 * std::pow(w, 3);
    const double rhs = 9 * std::pow(w, 4) + 6 * w * w;
    CHECK(v.margin == doctest::Approx(rhs - lhs));
  }

  const auto mixed = is_entangled_makhlin(StateParams{});
  CHECK_FALSE(mixed.entangled);
  CHECK(mixed.margin == doctest::Approx(-1.0));  // LHS = 1, RHS = 0

  StateParams bd;
  bd.C = Vec3(0.5, 0.5, -0.5).asDiagonal();
  CHECK(is_entangled_makhlin(bd).entangled);
}

TEST_CASE("bargmann detector") {
  const auto bell = is_entangled_bargmann(bargmann_direct(werner(1.0)));
  CHECK(bell.entangled);
  CHECK(bargmann_criterion_lhs(bargmann_direct(werner(1.0))) == doctest::Approx(-0.5));

  const BargmannVector mixed = bargmann_direct(0.25 * Mat4c::Identity());
  CHECK(bargmann_criterion_lhs(mixed) == doctest::Approx(1.09375));
  CHECK_FALSE(is_entangled_bargmann(mixed).entangled);

  StateParams zz;
  zz.a = zz.b = Vec3(0, 0, 1);
  zz.C = Vec3(0, 0, 1).asDiagonal();
  const auto pure_product = is_entangled_bargmann(bargmann_direct(state_from_params(zz)));
  CHECK_FALSE(pure_product.entangled);
  CHECK(pure_product.boundary);  // LHS = 1 exactly
}

TEST_CASE("positivity checks") {
  const auto mixed = positivity_check(params_from_state(0.25 * Mat4c::Identity()));
  CHECK(mixed.psd);
  CHECK(mixed.violated.empty());
  const auto mixed_pt = positivity_check_power_traces(0.25 * Mat4c::Identity());
  CHECK(mixed_pt.psd);
  // 1 + 2 tr rho^3 >= 3 tr rho^2 is e3 >= 0: 1 + 2/16 = 1.125 >= 0.75.
  CHECK(1.0 + 2.0 / 16 >= 3.0 / 4);

  CHECK(positivity_check(params_from_state(werner(1.0))).psd);
  CHECK(positivity_check_power_traces(werner(1.0)).psd);

  StateParams bad;
  bad.C = -1.5 * Mat3::Identity();
  const auto rep = positivity_check(bad);
  CHECK_FALSE(rep.psd);
  CHECK_FALSE(rep.violated.empty());
  CHECK(min_eigenvalue(state_from_params(bad)) < -1e-6);
  CHECK_FALSE(positivity_check_power_traces(state_from_params(bad)).psd);
}

TEST_CASE("closed-form family verdicts") {
  CHECK(werner_threshold() == doctest::Approx(1.0 / 3));
  CHECK(bell_diagonal_entangled(0.5, 0.5, -0.5));
  CHECK_FALSE(bell_diagonal_entangled(0.3, 0.3, 0.3));
  CHECK_THROWS_AS(bell_diagonal_entangled(1, 1, 1), std::out_of_range);
}

TEST_CASE("three-way agreement and sweeps") {
  for (const auto& r : selftest::detector_agreement(61, 500, 1e-9)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
  for (const auto& r : selftest::werner_bisection(1e-9)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
  for (const auto& r : selftest::bell_diagonal_sweep(9, 1e-8)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
}
