// Real and complex 3-vector / 3x3-matrix algebra used throughout the
// invariant computations: bilinear cross products, cofactor and adjugate
// matrices via the Cayley-Hamilton form, the Omega and Psi bilinear maps,
// and Newton's identities for elementary symmetric functions.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace luinv {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec3c = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;

// Bilinear cross product. Eigen's MatrixBase::cross conjugates complex
// operands, which breaks the polynomial identities below, so we roll our own.
template <typename S>
inline Eigen::Matrix<S, 3, 1> cross3(const Eigen::Matrix<S, 3, 1>& u,
                                     const Eigen::Matrix<S, 3, 1>& v) {
  return Eigen::Matrix<S, 3, 1>(u(1) * v(2) - u(2) * v(1),
                                u(2) * v(0) - u(0) * v(2),
                                u(0) * v(1) - u(1) * v(0));
}

inline Vec3 cross(const Vec3& u, const Vec3& v) { return cross3<double>(u, v); }

// Bilinear inner products <u,v> = u^T v and <M,N> = tr(M^T N); no conjugation.
template <typename S>
inline S dot3(const Eigen::Matrix<S, 3, 1>& u, const Eigen::Matrix<S, 3, 1>& v) {
  return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

template <typename S>
inline S frob3(const Eigen::Matrix<S, 3, 3>& m, const Eigen::Matrix<S, 3, 3>& n) {
  return (m.transpose() * n).trace();
}

// The antisymmetric generator triple F_k = (epsilon_{ijk})_{3x3}.
// F_k^T = -F_k and <F_i,F_j> = 2 delta_ij.
const Mat3& cross_generator(int k);  // k in {0,1,2}

// x . F = sum_k x_k F_k; satisfies (x.F)^T y = cross(x, y).
template <typename S>
inline Eigen::Matrix<S, 3, 3> cross_matrix(const Eigen::Matrix<S, 3, 1>& x) {
  Eigen::Matrix<S, 3, 3> m;
  const S z(0);
  m << z, x(2), -x(1),
      -x(2), z, x(0),
      x(1), -x(0), z;
  return m;
}

// Cofactor matrix via the Cayley-Hamilton form of the adjugate:
// adj(M) = M^2 - tr(M) M + e2(M) I, cof(M) = adj(M)^T.
template <typename S>
inline Eigen::Matrix<S, 3, 3> adjugate(const Eigen::Matrix<S, 3, 3>& m) {
  const S tr = m.trace();
  const S e2 = (tr * tr - (m * m).trace()) / S(2);
  return m * m - tr * m + e2 * Eigen::Matrix<S, 3, 3>::Identity();
}

template <typename S>
inline Eigen::Matrix<S, 3, 3> cofactor_matrix(const Eigen::Matrix<S, 3, 3>& m) {
  return adjugate<S>(m).transpose();
}

// Omega(M, N) = cof(M+N) - cof(M) - cof(N); symmetric bilinear.
// Entrywise Omega(M,N)_{pq} = -<F_p M F_q, N>.
template <typename S>
inline Eigen::Matrix<S, 3, 3> omega(const Eigen::Matrix<S, 3, 3>& m,
                                    const Eigen::Matrix<S, 3, 3>& n) {
  return cofactor_matrix<S>(m + n) - cofactor_matrix<S>(m) - cofactor_matrix<S>(n);
}

// Psi(x, M, y) = (x.F)^T M + M (y.F).
template <typename S>
inline Eigen::Matrix<S, 3, 3> psi(const Eigen::Matrix<S, 3, 1>& x,
                                  const Eigen::Matrix<S, 3, 3>& m,
                                  const Eigen::Matrix<S, 3, 1>& y) {
  return cross_matrix<S>(x).transpose() * m + m * cross_matrix<S>(y);
}

// Newton's identities: elementary symmetric functions e_1..e_k from power
// sums p_1..p_k via k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j.
// For a Hermitian matrix with p_j = tr(X^j), all e_k >= 0 iff X is PSD.
std::vector<double> elementary_from_power_sums(const std::vector<double>& p);

}  // namespace luinv
