// Pauli-basis (Bloch) representation of two-qubit operators.
//
// Any 4x4 operator X decomposes as
//   X = t I4 + r.sigma (x) I2 + I2 (x) s.sigma + sum_ij T_ij sigma_i (x) sigma_j
// with complex coefficients (t, r, s, T). Products, commutators and powers
// are computed directly on the coefficients, never through dense 4x4
// multiplication.
#pragma once

#include "luinv/linalg3.hpp"

#include <Eigen/Dense>

namespace luinv {

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

const Mat2c& pauli(int k);     // k in {0,1,2,3}, pauli(0) = identity
const Mat4c& pauli_kron(int i, int j);  // sigma_i (x) sigma_j, 16 basis elements

Mat4c kron22(const Mat2c& a, const Mat2c& b);

struct BlochForm {
  cplx t{0.0, 0.0};
  Vec3c r = Vec3c::Zero();
  Vec3c s = Vec3c::Zero();
  Mat3c T = Mat3c::Zero();

  static BlochForm identity() { return BlochForm{cplx(1.0), Vec3c::Zero(), Vec3c::Zero(), Mat3c::Zero()}; }

  // Largest imaginary part across all coefficients; Hermitian operators have
  // all-real coefficients.
  double max_imag() const;
  bool is_real(double tol = 1e-10) const { return max_imag() < tol; }
  BlochForm real_part() const;
};

BlochForm decompose(const Mat4c& x);
Mat4c reconstruct(const BlochForm& b);

// Product formula: coefficients of X X' from those of X and X'.
BlochForm bloch_product(const BlochForm& x, const BlochForm& y);

// Commutator [X, X'] of two Hermitian operators (real coefficient tuples),
// from the closed form 2i(...); equals the product difference.
BlochForm commutator_bloch(const BlochForm& x, const BlochForm& y);

// X^k by repeated multiplication with the fixed base; k = 0 gives I4.
BlochForm bloch_power(const BlochForm& b, int k);

// tr(X X') = 4 (t t' + <r,r'> + <s,s'> + <T,T'>).
cplx bloch_trace_product(const BlochForm& x, const BlochForm& y);

inline cplx bloch_trace(const BlochForm& b) { return 4.0 * b.t; }

// sum_i col_i(A) x col_i(B), the vector entering the product formula.
Vec3c column_cross_sum(const Mat3c& a, const Mat3c& b);

}  // namespace luinv
