// The three invariant families of a two-qubit state and the closed-form
// polynomial maps between them:
//   - Makhlin's I-family and the equivalent L-family, polynomials in (a,b,C);
//   - the 18 Bargmann invariants B_k, traces of words in
//     X0 = rho_AB, X1 = rho_A (x) 1, X2 = 1 (x) rho_B;
// plus the characteristic-polynomial coefficients of 4 rho - 1 and of its
// partial transpose.
#pragma once

#include "luinv/states.hpp"

#include <array>
#include <vector>

namespace luinv {

using MakhlinVector = std::array<double, 18>;
using BargmannVector = std::array<cplx, 18>;

// Trace of the ordered product of square matrices of equal dimension.
cplx multivariate_trace(const std::vector<Eigen::MatrixXcd>& ms);

MakhlinVector makhlin_L(const StateParams& p);

// Makhlin's original tuple. I14 is computed from its defining expression
// <(a.F)C, C(b.F)>, which evaluates to 2 L14.
MakhlinVector makhlin_I(const StateParams& p);

// The 18 trace words evaluated on dense 4x4 matrices; ground truth for the
// polynomial conversions.
BargmannVector bargmann_direct(const Mat4c& rho);

// B_k as polynomials in the L_k (complex for k >= 13).
BargmannVector bargmann_from_L(const MakhlinVector& L);

// L_k as polynomials in the B_k. The expressions are complex-valued; the
// imaginary residue (reported through max_imag_residue when non-null) should
// vanish for invariants of a valid state.
MakhlinVector L_from_B(const BargmannVector& B, double* max_imag_residue = nullptr);

// The complex values of the printed L(B) expressions before taking real parts.
std::array<cplx, 18> L_from_B_complex(const BargmannVector& B);

// x^4 + p x^2 + q x + r annihilates the eigenvalues of 4 rho - 1
// (char_coeffs) resp. of 4 rho^Gamma - 1 (char_coeffs_pt).
struct CharCoeffs {
  double p = 0.0, q = 0.0, r = 0.0;
};

CharCoeffs char_coeffs(const StateParams& p);
CharCoeffs char_coeffs_pt(const StateParams& p);

// det(rho^Gamma) = (p - q + r + 1) / 256 evaluated from char_coeffs_pt; same
// formula gives det(rho) from char_coeffs.
double det_from_char_coeffs(const CharCoeffs& c);

}  // namespace luinv
