#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luinv/linalg3.hpp"
#include "luinv/reference.hpp"
#include "luinv/selftest.hpp"

#include <random>

using namespace luinv;

namespace {
Mat3 rmat(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(g);
  return m;
}
}  // namespace

TEST_CASE("cross product basics") {
  const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  CHECK((cross(e1, e2) - e3).norm() == doctest::Approx(0.0));
  const Vec3 u(0.3, -0.7, 1.1);
  CHECK(cross(u, u).norm() == doctest::Approx(0.0));
  CHECK((cross(Vec3(1, 2, 3), Vec3(4, 5, 6)) - Vec3(-3, 6, -3)).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("cross_matrix realizes the cross product") {
  const Vec3 e1(1, 0, 0);
  CHECK((cross_matrix<double>(e1) - cross_generator(0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cross_matrix<double>(Vec3::Zero()).cwiseAbs().maxCoeff() == 0.0);
  const Vec3 x(1, 1, 1);
  const Vec3 lhs = cross_matrix<double>(x).transpose() * e1;
  CHECK((lhs - cross(x, e1)).norm() < 1e-15);
  CHECK((lhs - Vec3(0, 1, -1)).norm() < 1e-15);
}

TEST_CASE("cross generators are antisymmetric and orthogonal") {
  for (int i = 0; i < 3; ++i) {
    const Mat3& f = cross_generator(i);
    CHECK((f + f.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (int j = 0; j < 3; ++j)
      CHECK(frob3<double>(f, cross_generator(j)) == doctest::Approx(i == j ? 2.0 : 0.0));
  }
  CHECK_THROWS_AS(cross_generator(3), std::out_of_range);
}

TEST_CASE("adjugate examples") {
  CHECK((adjugate<double>(Mat3::Identity()) - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  const Mat3 d = Vec3(1, 2, 3).asDiagonal();
  const Mat3 want = Vec3(6, 3, 2).asDiagonal();
  CHECK((adjugate<double>(d) - want).cwiseAbs().maxCoeff() < 1e-14);
  const double w = 1.7;
  const Mat3 m = -w * Mat3::Identity();
  CHECK((adjugate<double>(m) - w * w * Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-13);

  std::mt19937_64 g(5);
  for (int i = 0; i < 50; ++i) {
    const Mat3 r = rmat(g);
    CHECK((r * adjugate<double>(r) - r.determinant() * Mat3::Identity()).cwiseAbs().maxCoeff() <
          1e-13);
  }
}

TEST_CASE("cofactor matrix properties") {
  CHECK((cofactor_matrix<double>(Mat3::Identity()) - Mat3::Identity()).cwiseAbs().maxCoeff() <
        1e-15);
  std::mt19937_64 g(6);
  for (int i = 0; i < 50; ++i) {
    const Mat3 m = rmat(g), n = rmat(g);
    CHECK((cofactor_matrix<double>(Mat3(m.transpose())) -
           cofactor_matrix<double>(m).transpose())
              .cwiseAbs()
              .maxCoeff() < 1e-13);
    CHECK((cofactor_matrix<double>(Mat3(m * n)) -
           cofactor_matrix<double>(m) * cofactor_matrix<double>(n))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
    CHECK((cofactor_matrix<double>(m) - reference::cofactor_expansion(m)).cwiseAbs().maxCoeff() <
          1e-13);
  }
}

TEST_CASE("omega examples") {
  std::mt19937_64 g(7);
  const Mat3 m = rmat(g);
  CHECK((omega<double>(m, m) - 2.0 * cofactor_matrix<double>(m)).cwiseAbs().maxCoeff() < 1e-13);
  const Vec3 x(0.4, -0.2, 0.9);
  const Mat3 xf = cross_matrix<double>(x);
  CHECK((omega<double>(xf, xf) - 2.0 * x * x.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((omega<double>(Mat3::Identity(), Mat3::Identity()) - 2.0 * Mat3::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  const Mat3 n = rmat(g);
  CHECK((omega<double>(m, n) - omega<double>(n, m)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((omega<double>(m, n) - reference::omega_by_rows<double>(m, n)).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK((omega<double>(m, n) - reference::omega_entrywise(m, n)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("psi examples") {
  std::mt19937_64 g(8);
  const Mat3 m = rmat(g);
  CHECK(psi<double>(Vec3::Zero(), m, Vec3::Zero()).cwiseAbs().maxCoeff() == 0.0);
  const Mat3 want = cross_generator(0).transpose();
  CHECK((psi<double>(Vec3(1, 0, 0), Mat3::Identity(), Vec3::Zero()) - want)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  const Vec3 x = Vec3(0.1, 0.2, -0.3), y = Vec3(-0.5, 0.4, 0.8);
  Mat3 acc = Mat3::Zero();
  for (int k = 0; k < 3; ++k)
    acc += x(k) * cross_generator(k).transpose() * m + y(k) * m * cross_generator(k);
  CHECK((psi<double>(x, m, y) - acc).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Newton identities from power sums") {
  const auto zero = elementary_from_power_sums({0, 0, 0, 0});
  for (double e : zero) CHECK(e == 0.0);

  // eigenvalues {3,-1,-1,-1}
  const auto e1 = elementary_from_power_sums({0, 12, 24, 84});
  CHECK(e1[0] == doctest::Approx(0));
  CHECK(e1[1] == doctest::Approx(-6));
  CHECK(e1[2] == doctest::Approx(8));
  CHECK(e1[3] == doctest::Approx(-3));

  const auto e2 = elementary_from_power_sums({4, 4, 4, 4});
  CHECK(e2[0] == doctest::Approx(4));
  CHECK(e2[1] == doctest::Approx(6));
  CHECK(e2[2] == doctest::Approx(4));
  CHECK(e2[3] == doctest::Approx(1));

  CHECK_THROWS_AS(elementary_from_power_sums({}), std::invalid_argument);

  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> p;
    for (int k = 0; k < 5; ++k) p.push_back(u(g));
    const auto a = elementary_from_power_sums(p);
    const auto b = reference::elementary_via_determinant(p);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-10));
  }
}

TEST_CASE("identity suite holds on random inputs") {
  const auto rs = selftest::linalg3_identities(42, 30, 1e-10);
  CHECK(rs.size() >= 20);
  for (const auto& r : rs) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.passed);
  }
}
