#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luinv/luequiv.hpp"
#include "luinv/selftest.hpp"

#include <random>

using namespace luinv;

TEST_CASE("permutation operators") {
  const Eigen::MatrixXcd id = permutation_operator(2, 3, {0, 1, 2});
  CHECK((id - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXcd swap(4, 4);
  swap << 1, 0, 0, 0,
          0, 0, 1, 0,
          0, 1, 0, 0,
          0, 0, 0, 1;
  CHECK((permutation_operator(2, 2, {1, 0}) - swap).cwiseAbs().maxCoeff() == 0.0);

  // tr P(pi) = d^(#cycles): a 3-cycle on 3 qubit slots has one cycle.
  CHECK(permutation_operator(2, 3, {1, 2, 0}).trace().real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(permutation_operator(2, 2, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(permutation_operator(2, 13, Permutation{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}),
                  std::length_error);
}

TEST_CASE("local permutation operator layout") {
  PermutationTuple t;
  t.n = 2;
  t.dims = {2, 2};
  t.pis = {{0, 1}, {0, 1}};
  CHECK((local_permutation_operator(t) - Eigen::MatrixXcd::Identity(16, 16))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // (swap, swap) is the global swap of the two 4-dimensional copies.
  t.pis = {{1, 0}, {1, 0}};
  const Eigen::MatrixXcd g = local_permutation_operator(t);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Eigen::VectorXcd in = Eigen::VectorXcd::Zero(16);
      in(4 * a + b) = 1.0;
      const Eigen::VectorXcd out = g * in;
      CHECK(std::abs(out(4 * b + a) - 1.0) < 1e-15);
    }

  // (swap, id) exchanges only the A slots: |a1 b1 a2 b2> -> |a2 b1 a1 b2>.
  t.pis = {{1, 0}, {0, 1}};
  const Eigen::MatrixXcd sa = local_permutation_operator(t);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const int in_idx = 8 * a1 + 4 * b1 + 2 * a2 + b2;
          const int out_idx = 8 * a2 + 4 * b1 + 2 * a1 + b2;
          CHECK(std::abs(sa(out_idx, in_idx) - 1.0) < 1e-15);
        }

  PermutationTuple bad = t;
  bad.pis.pop_back();
  CHECK_THROWS_AS(local_permutation_operator(bad), std::invalid_argument);
}

TEST_CASE("permutation traces") {
  std::mt19937_64 g(51);
  const Mat4c rho = random_density(g);

  PermutationTuple t;
  t.dims = {2, 2};
  t.n = 1;
  t.pis = {{0}, {0}};
  CHECK(std::abs(permutation_trace(rho, t) - 1.0) < 1e-14);

  t.n = 2;
  t.pis = {{1, 0}, {1, 0}};
  CHECK(std::abs(permutation_trace(rho, t) - (rho * rho).trace()) < 1e-13);
  t.pis = {{1, 0}, {0, 1}};
  const Mat2c ra = partial_trace(rho, Subsystem::A);
  CHECK(std::abs(permutation_trace(rho, t) - (ra * ra).trace()) < 1e-13);

  CHECK_THROWS_AS(permutation_trace(Eigen::MatrixXcd::Identity(2, 2), t),
                  std::invalid_argument);

  for (const auto& r : selftest::permutation_suite(52, 50, 1e-10, 1e-9)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
}

TEST_CASE("lu_equivalent verdicts") {
  std::mt19937_64 g(53);
  const Mat4c rho = random_density(g);

  const EquivalenceReport same = lu_equivalent(rho, rho, 1e-8);
  CHECK(same.verdict == Equivalence::equivalent);
  CHECK(same.max_discrepancy == 0.0);

  const EquivalenceReport orbit = lu_equivalent(rho, apply_lu(rho, random_local_unitary(g)), 1e-8);
  CHECK(orbit.verdict == Equivalence::equivalent);

  const EquivalenceReport werners = lu_equivalent(werner(0.3), werner(0.6), 1e-8);
  CHECK(werners.verdict == Equivalence::inequivalent);
  // B4 differs by (1 + 3*0.36)/4 - (1 + 3*0.09)/4 = 0.2025.
  const BargmannVector b03 = bargmann_direct(werner(0.3));
  const BargmannVector b06 = bargmann_direct(werner(0.6));
  CHECK(std::abs(b06[3] - b03[3]) == doctest::Approx(0.2025));

  // Banding: a pair with discrepancy d is equivalent at tol 2d, inconclusive
  // at tol d/5, inequivalent at tol d/20.
  const Mat4c nearby = 0.999 * rho + 0.001 * 0.25 * Mat4c::Identity();
  const double d = lu_equivalent(rho, nearby, 1.0).max_discrepancy;
  REQUIRE(d > 0.0);
  CHECK(lu_equivalent(rho, nearby, 2 * d).verdict == Equivalence::equivalent);
  CHECK(lu_equivalent(rho, nearby, d / 5).verdict == Equivalence::inconclusive);
  CHECK(lu_equivalent(rho, nearby, d / 20).verdict == Equivalence::inequivalent);

  for (const auto& r : selftest::lu_discrimination(54, 60, 1e-8)) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
}
