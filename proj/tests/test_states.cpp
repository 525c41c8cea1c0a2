#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luinv/selftest.hpp"
#include "luinv/states.hpp"

#include <random>

using namespace luinv;

TEST_CASE("state_from_params") {
  const Mat4c mixed = state_from_params(StateParams{});
  CHECK((mixed - 0.25 * Mat4c::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  StateParams w;
  w.C = -0.6 * Mat3::Identity();
  CHECK((state_from_params(w) - werner(0.6)).cwiseAbs().maxCoeff() < 1e-15);

  StateParams zz;
  zz.a = Vec3(0, 0, 1);
  zz.b = Vec3(0, 0, 1);
  zz.C = Vec3(0, 0, 1).asDiagonal();
  Mat4c ket00 = Mat4c::Zero();
  ket00(0, 0) = 1.0;
  CHECK((state_from_params(zz) - ket00).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("params_from_state round trip") {
  const StateParams mixed = params_from_state(0.25 * Mat4c::Identity());
  CHECK(mixed.a.norm() < 1e-15);
  CHECK(mixed.b.norm() < 1e-15);
  CHECK(mixed.C.cwiseAbs().maxCoeff() < 1e-15);

  const StateParams w = params_from_state(werner(0.4));
  CHECK((w.C + 0.4 * Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  std::mt19937_64 g(31);
  for (int i = 0; i < 100; ++i) {
    const Mat4c rho = random_density(g);
    CHECK((state_from_params(params_from_state(rho)) - rho).cwiseAbs().maxCoeff() < 1e-12);
  }

  Mat4c bad = Mat4c::Zero();
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(params_from_state(bad), std::invalid_argument);
}

TEST_CASE("werner family") {
  CHECK((werner(0.0) - 0.25 * Mat4c::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::Vector4cd psi_minus;
  psi_minus << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  CHECK((werner(1.0) - psi_minus * psi_minus.adjoint()).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::SelfAdjointEigenSolver<Mat4c> es(werner(0.5), Eigen::EigenvaluesOnly);
  Eigen::Vector4d eig = es.eigenvalues();
  std::sort(eig.data(), eig.data() + 4);
  CHECK(eig(0) == doctest::Approx(0.125));
  CHECK(eig(1) == doctest::Approx(0.125));
  CHECK(eig(2) == doctest::Approx(0.125));
  CHECK(eig(3) == doctest::Approx(0.625));

  CHECK_THROWS_AS(werner(-0.1), std::out_of_range);
  CHECK_THROWS_AS(werner(1.1), std::out_of_range);
}

TEST_CASE("bell-diagonal family") {
  CHECK((bell_diagonal(0, 0, 0) - 0.25 * Mat4c::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((bell_diagonal(-1, -1, -1) - werner(1.0)).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::SelfAdjointEigenSolver<Mat4c> es(bell_diagonal(1, 1, -1), Eigen::EigenvaluesOnly);
  Eigen::Vector4d eig = es.eigenvalues();
  std::sort(eig.data(), eig.data() + 4);
  CHECK(eig(3) == doctest::Approx(1.0));
  CHECK(std::abs(eig(0)) < 1e-14);
  CHECK(std::abs(eig(2)) < 1e-14);

  CHECK_THROWS_AS(bell_diagonal(1, 1, 1), std::out_of_range);
}

TEST_CASE("partial trace") {
  std::mt19937_64 g(32);
  // Product state: exact marginals.
  Mat2c ra, rb;
  ra << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
  rb << 0.4, cplx(-0.05, 0.1), cplx(-0.05, -0.1), 0.6;
  const Mat4c prod = kron22(ra, rb);
  CHECK((partial_trace(prod, Subsystem::A) - ra).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((partial_trace(prod, Subsystem::B) - rb).cwiseAbs().maxCoeff() < 1e-15);

  CHECK((partial_trace(werner(1.0), Subsystem::A) - 0.5 * Mat2c::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // Index-summation oracle on random states.
  for (int i = 0; i < 50; ++i) {
    const Mat4c rho = random_density(g);
    Mat2c oracle_a = Mat2c::Zero(), oracle_b = Mat2c::Zero();
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int k = 0; k < 2; ++k) {
          oracle_a(a, ap) += rho(2 * a + k, 2 * ap + k);
          oracle_b(a, ap) += rho(2 * k + a, 2 * k + ap);
        }
    CHECK((partial_trace(rho, Subsystem::A) - oracle_a).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((partial_trace(rho, Subsystem::B) - oracle_b).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(partial_trace(rho, Subsystem::A).trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("partial transpose") {
  std::mt19937_64 g(33);
  Mat2c ra, rb;
  ra << 0.8, cplx(0.0, 0.3), cplx(0.0, -0.3), 0.2;
  rb << 0.5, 0.1, 0.1, 0.5;
  const Mat4c prod = kron22(ra, rb);
  const Mat4c pt = partial_transpose(prod);
  CHECK((pt - kron22(Mat2c(ra.transpose()), rb)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(min_eigenvalue(pt) > -1e-12);

  CHECK(min_eigenvalue(partial_transpose(werner(1.0))) == doctest::Approx(-0.5));

  for (int i = 0; i < 50; ++i) {
    const Mat4c rho = random_density(g);
    CHECK((partial_transpose(partial_transpose(rho)) - rho).cwiseAbs().maxCoeff() == 0.0);
    const Mat4c p = partial_transpose(rho);
    CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(p.trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("samplers and local unitaries") {
  std::mt19937_64 g(34);
  for (int i = 0; i < 50; ++i) {
    const Mat4c rho = random_density(g);
    CHECK(is_valid_state(rho));

    const Mat2c u = random_unitary2(g);
    CHECK((u.adjoint() * u - Mat2c::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    const LocalUnitary lu = random_local_unitary(g);
    const Mat4c rot = apply_lu(rho, lu);
    CHECK(std::abs((rot * rot).trace() - (rho * rho).trace()) < 1e-12);

    Eigen::SelfAdjointEigenSolver<Mat2c> ea(partial_trace(rho, Subsystem::A));
    Eigen::SelfAdjointEigenSolver<Mat2c> eb(partial_trace(rot, Subsystem::A));
    CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
  }
  const Mat4c rho = random_density(g);
  CHECK((apply_lu(rho, LocalUnitary{}) - rho).cwiseAbs().maxCoeff() < 1e-15);

  // Determinism under equal seeds.
  std::mt19937_64 g1(99), g2(99);
  CHECK((random_density(g1) - random_density(g2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("positivity criteria agree with eigenvalues") {
  for (const auto& r : selftest::positivity_agreement(35, 400, 1e-8)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
  for (const auto& r : selftest::bell_diagonal_grid(9, 1e-8)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
}
