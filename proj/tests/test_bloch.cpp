#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luinv/bloch.hpp"
#include "luinv/selftest.hpp"
#include "luinv/states.hpp"

#include <random>

using namespace luinv;

namespace {
BlochForm random_hermitian_form(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BlochForm b;
  b.t = u(g);
  for (int i = 0; i < 3; ++i) {
    b.r(i) = u(g);
    b.s(i) = u(g);
    for (int j = 0; j < 3; ++j) b.T(i, j) = u(g);
  }
  return b;
}
}  // namespace

TEST_CASE("decompose basis elements") {
  const BlochForm id = decompose(Mat4c::Identity());
  CHECK(std::abs(id.t - 1.0) < 1e-15);
  CHECK(id.r.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(id.s.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(id.T.cwiseAbs().maxCoeff() < 1e-15);

  const BlochForm zz = decompose(pauli_kron(3, 3));
  CHECK(std::abs(zz.t) < 1e-15);
  CHECK(std::abs(zz.T(2, 2) - 1.0) < 1e-15);
  CHECK(std::abs(zz.T.cwiseAbs().sum() - 1.0) < 1e-15);

  // |psi-><psi-| = (1/4)(I - sum_k sigma_k x sigma_k)
  const BlochForm bell = decompose(werner(1.0));
  CHECK(std::abs(bell.t - 0.25) < 1e-15);
  CHECK(bell.r.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(bell.s.cwiseAbs().maxCoeff() < 1e-15);
  CHECK((bell.T + 0.25 * Mat3c::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("reconstruct inverts decompose") {
  CHECK((reconstruct(BlochForm::identity()) - Mat4c::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  BlochForm wform;
  wform.t = 0.25;
  wform.T = -0.25 * 0.8 * Mat3c::Identity();
  CHECK((reconstruct(wform) - werner(0.8)).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 g(11);
  for (int i = 0; i < 100; ++i) {
    const BlochForm b = random_hermitian_form(g);
    const Mat4c x = reconstruct(b);
    CHECK((x - x.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((reconstruct(decompose(x)) - x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("product formula") {
  std::mt19937_64 g(12);
  const BlochForm b = random_hermitian_form(g);
  const BlochForm via_id = bloch_product(b, BlochForm::identity());
  CHECK((reconstruct(via_id) - reconstruct(b)).cwiseAbs().maxCoeff() < 1e-14);

  for (int i = 0; i < 200; ++i) {
    const BlochForm x = random_hermitian_form(g), y = random_hermitian_form(g);
    const Mat4c dense = reconstruct(x) * reconstruct(y);
    CHECK((reconstruct(bloch_product(x, y)) - dense).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(bloch_trace_product(x, y) - dense.trace()) < 1e-10);
  }

  // Bell projector is pure: the t coefficient of rho^2 equals tr(rho^2)/4 = 1/4.
  const BlochForm bell = decompose(werner(1.0));
  CHECK(std::abs(bloch_product(bell, bell).t - 0.25) < 1e-14);
}

TEST_CASE("commutator") {
  std::mt19937_64 g(13);
  const BlochForm x = random_hermitian_form(g);
  CHECK(reconstruct(commutator_bloch(x, x)).cwiseAbs().maxCoeff() < 1e-13);

  // Two operators diagonal in the computational basis commute.
  BlochForm d1, d2;
  d1.t = 0.3; d1.r(2) = 0.5; d1.s(2) = -0.2; d1.T(2, 2) = 0.7;
  d2.t = -0.1; d2.r(2) = 0.25; d2.s(2) = 0.9; d2.T(2, 2) = -0.4;
  CHECK(reconstruct(commutator_bloch(d1, d2)).cwiseAbs().maxCoeff() < 1e-14);

  for (int i = 0; i < 100; ++i) {
    const BlochForm a = random_hermitian_form(g), b = random_hermitian_form(g);
    const Mat4c dense = reconstruct(a) * reconstruct(b) - reconstruct(b) * reconstruct(a);
    CHECK((reconstruct(commutator_bloch(a, b)) - dense).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("powers") {
  std::mt19937_64 g(14);
  const BlochForm b = random_hermitian_form(g);
  CHECK((reconstruct(bloch_power(b, 1)) - reconstruct(b)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((reconstruct(bloch_power(b, 0)) - Mat4c::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(bloch_power(b, -1), std::invalid_argument);

  const BlochForm id = BlochForm::identity();
  for (int k : {1, 3, 5}) {
    const BlochForm p = bloch_power(id, k);
    CHECK(std::abs(p.t - 1.0) < 1e-15);
    CHECK(p.T.cwiseAbs().maxCoeff() < 1e-15);
  }

  // X = 4 rho_w at w = 1: tr(rho^2) = t^(2)/4 = 1 for the pure Bell state.
  BlochForm x4rho = decompose(4.0 * werner(1.0));
  CHECK(std::abs(bloch_power(x4rho, 2).t - 4.0) < 1e-12);

  // The realness predicate gates the Hermitian-only operations.
  BlochForm nonherm = random_hermitian_form(g);
  nonherm.t += cplx(0.0, 0.5);
  CHECK_FALSE(nonherm.is_real());
  CHECK_THROWS_AS(bloch_power(nonherm, 2), std::invalid_argument);
  CHECK_THROWS_AS(commutator_bloch(nonherm, b), std::invalid_argument);
}

TEST_CASE("closed forms and state products match the suites") {
  for (const auto& r : selftest::bloch_power_closed_forms(21, 40, 1e-9)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
  for (const auto& r : selftest::bloch_state_products(22, 30, 1e-9)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
  for (const auto& r : selftest::bloch_basics(23, 100, 1e-10)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
}
