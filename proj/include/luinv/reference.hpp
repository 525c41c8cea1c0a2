// Reference evaluators used as cross-checks against the production paths.
// Each function here is an independent route to a quantity the library
// computes elsewhere; they are exercised by the test and selftest suites and
// are not part of the production code paths.
#pragma once

#include "luinv/bloch.hpp"
#include "luinv/linalg3.hpp"

#include <vector>

namespace luinv::reference {

// Omega from its defining row-wise cross products.
template <typename S>
Eigen::Matrix<S, 3, 3> omega_by_rows(const Eigen::Matrix<S, 3, 3>& m,
                                     const Eigen::Matrix<S, 3, 3>& n) {
  auto rowcross = [](const Eigen::Matrix<S, 3, 3>& p, int i,
                     const Eigen::Matrix<S, 3, 3>& q, int j) -> Eigen::Matrix<S, 1, 3> {
    const Eigen::Matrix<S, 3, 1> u = p.row(i).transpose();
    const Eigen::Matrix<S, 3, 1> v = q.row(j).transpose();
    return cross3<S>(u, v).transpose();
  };
  Eigen::Matrix<S, 3, 3> w;
  w.row(0) = rowcross(m, 1, n, 2) + rowcross(n, 1, m, 2);
  w.row(1) = rowcross(m, 2, n, 0) + rowcross(n, 2, m, 0);
  w.row(2) = rowcross(m, 0, n, 1) + rowcross(n, 0, m, 1);
  return w;
}

// Omega entrywise: Omega(M,N)_{pq} = -<F_p M F_q, N>.
Mat3 omega_entrywise(const Mat3& m, const Mat3& n);

// Cofactor matrix by direct 2x2 minor expansion.
Mat3 cofactor_expansion(const Mat3& m);

// Elementary symmetric functions by the k x k determinant formula
// e_k = (1/k!) det [[p1, 1, 0, ...], [p2, p1, 2, ...], ...].
std::vector<double> elementary_via_determinant(const std::vector<double>& p);

// Closed-form coefficients of X^2, X^3, X^4 as printed, term by term.
BlochForm power2_closed(const BlochForm& b);
BlochForm power3_closed(const BlochForm& b);
BlochForm power4_closed(const BlochForm& b);

// Coefficient tuple of rho^k for rho ~ (1,a,b,C)/4, scaled so that
// rho^k = (returned tuple) / 4^k; k in {2,3,4}.
BlochForm rho_power_coeffs(int k, const Vec3& a, const Vec3& b, const Mat3& C);

// Coefficient tuples of X^k (rho_A (x) 1), X^k (1 (x) rho_B) and
// X^k (rho_A (x) rho_B) given the tuple of X^k; the printed parenthesized
// tuples, i.e. without the leading 1/2 resp. 1/4 factors.
BlochForm xk_marginal_a(const BlochForm& xk, const Vec3& a);
BlochForm xk_marginal_b(const BlochForm& xk, const Vec3& b);
BlochForm xk_marginal_ab(const BlochForm& xk, const Vec3& a, const Vec3& b);

// Explicit printed tuples for rho^k (rho_A (x) 1) etc., k in {1,2,3}; scaled
// so that the operator equals (returned tuple) / (2 * 4^k) resp. 1/4^{k+1}.
BlochForm rhok_marginal_a(int k, const Vec3& a, const Vec3& b, const Mat3& C);
BlochForm rhok_marginal_b(int k, const Vec3& a, const Vec3& b, const Mat3& C);
BlochForm rhok_marginal_ab(int k, const Vec3& a, const Vec3& b, const Mat3& C);

}  // namespace luinv::reference
