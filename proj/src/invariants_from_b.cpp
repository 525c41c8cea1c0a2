#include "luinv/invariants.hpp"

namespace luinv {

namespace {
constexpr cplx kI{0.0, 1.0};
}

std::array<cplx, 18> L_from_B_complex(const BargmannVector& B) {
  const cplx B1 = B[0], B2 = B[1], B3 = B[2], B4 = B[3], B5 = B[4], B6 = B[5], B7 = B[6],
             B8 = B[7], B9 = B[8], B10 = B[9], B11 = B[10], B12 = B[11], B13 = B[12],
             B14 = B[13], B15 = B[14], B16 = B[15], B17 = B[16], B18 = B[17];
  std::array<cplx, 18> L;
  L[0] = 2.0 / 3.0 * (1.0 - 3.0 * B1 - 3.0 * B2 + 6.0 * B3 + 3.0 * B4 - 4.0 * B6);
  L[1] = 1.0 - 2.0 * B1 - 2.0 * B2 + 4.0 * B4;
  L[2] = 4.0 * (1.0 + B1 * B2 - 3.0 * B1 - 3.0 * B2 + 6.0 * B3 + B4 - B4 * B4 + B1 * B4 +
                B2 * B4 - 4.0 * B7 - 4.0 * B8 + 4.0 * B10);
  L[3] = 2.0 * B1 - 1.0;
  L[4] = 2.0 * B2 + 4.0 * B4 - 4.0 * B1 * B4 - 8.0 * B5 - 8.0 * B6 + 16.0 * B7 - 1.0;
  L[5] = 4.0 / 3.0 *
         (1.0 + 4.0 * B1 - 9.0 * B1 * B1 - 18.0 * B1 * B2 + 6.0 * B1 * B1 * B2 -
          3.0 * B2 * B2 + 24.0 * B1 * B3 + 12.0 * B2 * B3 - 12.0 * B3 * B3 - 12.0 * B4 +
          6.0 * B2 * B4 + 18.0 * B1 * B4 + 6.0 * B1 * B1 * B4 - 12.0 * B3 * B4 +
          3.0 * B4 * B4 - 6.0 * B1 * B4 * B4 + 12.0 * B5 - 12.0 * B1 * B5 + 20.0 * B6 -
          4.0 * B1 * B6 - 24.0 * B7 - 24.0 * B1 * B7 - 12.0 * B10 + 12.0 * B1 * B10 +
          24.0 * B11);
  L[6] = 2.0 * B2 - 1.0;
  L[7] = 2.0 * B1 - 4.0 * B2 * B4 + 4.0 * B4 - 8.0 * B5 - 8.0 * B6 + 16.0 * B8 - 1.0;
  L[8] = 4.0 / 3.0 *
         (1.0 + 4.0 * B2 - 9.0 * B2 * B2 - 18.0 * B1 * B2 + 6.0 * B1 * B2 * B2 -
          3.0 * B1 * B1 + 24.0 * B2 * B3 + 12.0 * B1 * B3 - 12.0 * B3 * B3 - 12.0 * B4 +
          6.0 * B1 * B4 + 18.0 * B2 * B4 + 6.0 * B2 * B2 * B4 - 12.0 * B3 * B4 +
          3.0 * B4 * B4 - 6.0 * B2 * B4 * B4 + 12.0 * B5 - 12.0 * B2 * B5 + 20.0 * B6 -
          4.0 * B2 * B6 - 24.0 * B8 - 24.0 * B2 * B8 - 12.0 * B10 + 12.0 * B2 * B10 +
          24.0 * B12);
  L[9] =
      2.0 / 3.0 * kI *
      (27.0 - 97.0 * B1 + 114.0 * B1 * B1 - 46.0 * B1 * B1 * B1 - 81.0 * B2 +
       178.0 * B1 * B2 - 64.0 * B1 * B1 * B2 + 78.0 * B2 * B2 + 108.0 * B1 * B2 * B2 +
       18.0 * B2 * B2 * B2 + 172.0 * B3 - 368.0 * B1 * B3 + 168.0 * B1 * B1 * B3 -
       384.0 * B2 * B3 - 288.0 * B1 * B2 * B3 - 144.0 * B2 * B2 * B3 + 456.0 * B3 * B3 -
       288.0 * B3 * B3 * B3 + 120.0 * B1 * B3 * B3 + 360.0 * B2 * B3 * B3 - 18.0 * B4 +
       54.0 * B1 * B4 + 54.0 * B2 * B4 - 137.0 * B1 * B1 * B4 + 48.0 * B1 * B1 * B1 * B4 -
       390.0 * B1 * B2 * B4 - 141.0 * B2 * B2 * B4 + 72.0 * B1 * B2 * B2 * B4 -
       108.0 * B3 * B4 + 660.0 * B1 * B3 * B4 + 48.0 * B1 * B1 * B3 * B4 +
       540.0 * B2 * B3 * B4 - 192.0 * B1 * B2 * B3 * B4 - 480.0 * B3 * B3 * B4 -
       129.0 * B4 * B4 + 261.0 * B1 * B4 * B4 + 72.0 * B1 * B1 * B4 * B4 +
       81.0 * B2 * B4 * B4 - 48.0 * B1 * B2 * B4 * B4 - 144.0 * B3 * B4 * B4 - 12.0 * B5 -
       68.0 * B1 * B5 + 96.0 * B1 * B1 * B5 + 36.0 * B2 * B5 - 144.0 * B1 * B2 * B5 +
       144.0 * B3 * B5 - 96.0 * B1 * B3 * B5 + 60.0 * B4 * B5 + 60.0 * B1 * B4 * B5 -
       36.0 * B2 * B4 * B5 + 96.0 * B3 * B4 * B5 + 48.0 * B4 * B4 * B5 + 88.0 * B6 -
       92.0 * B1 * B6 - 32.0 * B1 * B1 * B1 * B6 - 228.0 * B2 * B6 - 40.0 * B1 * B2 * B6 +
       64.0 * B1 * B1 * B2 * B6 + 488.0 * B3 * B6 + 32.0 * B1 * B3 * B6 + 336.0 * B4 * B6 +
       32.0 * B1 * B1 * B4 * B6 - 36.0 * B2 * B4 * B6 + 96.0 * B3 * B4 * B6 +
       48.0 * B4 * B4 * B6 + 48.0 * B5 * B6 - 64.0 * B1 * B5 * B6 - 40.0 * B6 * B6 -
       16.0 * B7 + 132.0 * B1 * B7 + 96.0 * B1 * B1 * B7 + 228.0 * B2 * B7 +
       384.0 * B1 * B2 * B7 - 624.0 * B3 * B7 - 768.0 * B1 * B3 * B7 - 552.0 * B4 * B7 -
       96.0 * B1 * B4 * B7 + 72.0 * B2 * B4 * B7 - 192.0 * B3 * B4 * B7 -
       96.0 * B4 * B4 * B7 + 144.0 * B5 * B7 + 400.0 * B6 * B7 - 768.0 * B7 * B7 +
       36.0 * B1 * B8 - 96.0 * B1 * B1 * B8 + 84.0 * B2 * B8 - 48.0 * B1 * B2 * B8 -
       240.0 * B3 * B8 + 288.0 * B1 * B3 * B8 - 24.0 * B4 * B8 + 72.0 * B1 * B4 * B8 -
       48.0 * B5 * B8 - 48.0 * B6 * B8 + 96.0 * B7 * B8 + 24.0 * B9 - 48.0 * B1 * B9 -
       144.0 * B2 * B9 + 192.0 * B1 * B2 * B9 + 96.0 * B3 * B9 - 90.0 * B10 +
       138.0 * B1 * B10 - 96.0 * B1 * B1 * B10 + 162.0 * B2 * B10 - 144.0 * B1 * B2 * B10 -
       288.0 * B3 * B10 + 192.0 * B1 * B3 * B10 - 144.0 * B4 * B10 + 96.0 * B1 * B4 * B10 -
       12.0 * B11 - 192.0 * B1 * B11 - 72.0 * B1 * B12 - 72.0 * B2 * B11 +
       192.0 * B3 * B11 + 96.0 * B4 * B11 + 36.0 * B12 + 96.0 * B13 - 192.0 * B1 * B13 -
       96.0 * B2 * B13 + 192.0 * B3 * B13 - 192.0 * B14 + 384.0 * B1 * B14 -
       384.0 * B1 * B16 + 192.0 * B16 + 768.0 * B17);
  L[10] =
      2.0 / 3.0 * kI *
      (27.0 - 97.0 * B2 + 114.0 * B2 * B2 - 46.0 * B2 * B2 * B2 - 81.0 * B1 +
       178.0 * B1 * B2 - 64.0 * B2 * B2 * B1 + 78.0 * B1 * B1 + 108.0 * B2 * B1 * B1 +
       18.0 * B1 * B1 * B1 + 172.0 * B3 - 368.0 * B2 * B3 + 168.0 * B2 * B2 * B3 -
       384.0 * B1 * B3 - 288.0 * B1 * B2 * B3 - 144.0 * B1 * B1 * B3 + 456.0 * B3 * B3 -
       288.0 * B3 * B3 * B3 + 120.0 * B2 * B3 * B3 + 360.0 * B1 * B3 * B3 - 18.0 * B4 +
       54.0 * B1 * B4 + 54.0 * B2 * B4 - 137.0 * B2 * B2 * B4 + 48.0 * B2 * B2 * B2 * B4 -
       390.0 * B1 * B2 * B4 - 141.0 * B1 * B1 * B4 + 72.0 * B1 * B1 * B2 * B4 -
       108.0 * B3 * B4 + 660.0 * B2 * B3 * B4 + 48.0 * B2 * B2 * B3 * B4 +
       540.0 * B1 * B3 * B4 - 192.0 * B1 * B2 * B3 * B4 - 480.0 * B3 * B3 * B4 -
       129.0 * B4 * B4 + 261.0 * B2 * B4 * B4 + 72.0 * B2 * B2 * B4 * B4 +
       81.0 * B1 * B4 * B4 - 48.0 * B1 * B2 * B4 * B4 - 144.0 * B3 * B4 * B4 - 12.0 * B5 -
       68.0 * B2 * B5 + 96.0 * B2 * B2 * B5 + 36.0 * B1 * B5 - 144.0 * B1 * B2 * B5 +
       144.0 * B3 * B5 - 96.0 * B2 * B3 * B5 + 60.0 * B4 * B5 + 60.0 * B2 * B4 * B5 -
       36.0 * B1 * B4 * B5 + 96.0 * B3 * B4 * B5 + 48.0 * B4 * B4 * B5 + 88.0 * B6 -
       92.0 * B2 * B6 - 32.0 * B2 * B2 * B2 * B6 - 228.0 * B1 * B6 - 40.0 * B1 * B2 * B6 +
       64.0 * B2 * B2 * B1 * B6 + 488.0 * B3 * B6 + 32.0 * B2 * B3 * B6 + 336.0 * B4 * B6 +
       32.0 * B2 * B2 * B4 * B6 - 36.0 * B1 * B4 * B6 + 96.0 * B3 * B4 * B6 +
       48.0 * B4 * B4 * B6 + 48.0 * B5 * B6 - 64.0 * B2 * B5 * B6 - 40.0 * B6 * B6 -
       16.0 * B8 + 132.0 * B2 * B8 + 96.0 * B2 * B2 * B8 + 228.0 * B1 * B8 +
       384.0 * B1 * B2 * B8 - 624.0 * B3 * B8 - 768.0 * B2 * B3 * B8 - 552.0 * B4 * B8 -
       96.0 * B2 * B4 * B8 + 72.0 * B1 * B4 * B8 - 192.0 * B3 * B4 * B8 -
       96.0 * B4 * B4 * B8 + 144.0 * B5 * B8 + 400.0 * B6 * B8 - 768.0 * B8 * B8 +
       36.0 * B2 * B7 - 96.0 * B2 * B2 * B7 + 84.0 * B1 * B7 - 48.0 * B1 * B2 * B7 -
       240.0 * B3 * B7 + 288.0 * B2 * B3 * B7 - 24.0 * B4 * B7 + 72.0 * B2 * B4 * B7 -
       48.0 * B5 * B7 - 48.0 * B6 * B7 + 96.0 * B7 * B8 + 24.0 * B9 - 48.0 * B2 * B9 -
       144.0 * B1 * B9 + 192.0 * B1 * B2 * B9 + 96.0 * B3 * B9 - 90.0 * B10 +
       138.0 * B2 * B10 - 96.0 * B2 * B2 * B10 + 162.0 * B1 * B10 - 144.0 * B1 * B2 * B10 -
       288.0 * B3 * B10 + 192.0 * B2 * B3 * B10 - 144.0 * B4 * B10 + 96.0 * B2 * B4 * B10 -
       12.0 * B12 - 192.0 * B2 * B12 - 72.0 * B1 * B12 - 72.0 * B2 * B11 +
       192.0 * B3 * B12 + 96.0 * B4 * B12 + 36.0 * B11 + 96.0 * B14 - 192.0 * B2 * B14 -
       96.0 * B1 * B14 + 192.0 * B3 * B14 - 192.0 * B13 + 384.0 * B2 * B13 -
       384.0 * B2 * B15 + 192.0 * B15 + 768.0 * B18);
  L[11] = 1.0 - 2.0 * B1 - 2.0 * B2 + 4.0 * B3;
  L[12] = 12.0 * (B1 + B2) - 12.0 * (B1 + B2) * B4 - 36.0 * B3 + 24.0 * B3 * B4 + 24.0 * B5 -
          8.0 * B6 + 16.0 * (B7 + B8) - 32.0 * B9 - 3.0;
  L[13] = 2.0 * (1.0 - 3.0 * B1 - 3.0 * B2 + 2.0 * B1 * B2 + 6.0 * B3 + B4 - 4.0 * B5);
  L[14] = 4.0 / 3.0 * kI *
          (-1.0 + 5.0 * B1 - 6.0 * B1 * B1 + 3.0 * B2 + 3.0 * B1 * B2 - 12.0 * B3 +
           6.0 * B1 * B3 - 6.0 * B2 * B3 + 12.0 * B3 * B3 + 6.0 * B4 - 12.0 * B1 * B4 -
           6.0 * B2 * B4 + 6.0 * B1 * B2 * B4 + 6.0 * B3 * B4 - 6.0 * B5 + 12.0 * B1 * B5 -
           14.0 * B6 + 4.0 * B1 * B6 + 24.0 * B7 + 12.0 * B8 - 12.0 * B1 * B8 - 24.0 * B13);
  L[15] = 4.0 / 3.0 * kI *
          (-1.0 + 5.0 * B2 - 6.0 * B2 * B2 + 3.0 * B1 + 3.0 * B1 * B2 - 12.0 * B3 +
           6.0 * B2 * B3 - 6.0 * B1 * B3 + 12.0 * B3 * B3 + 6.0 * B4 - 12.0 * B2 * B4 -
           6.0 * B1 * B4 + 6.0 * B1 * B2 * B4 + 6.0 * B3 * B4 - 6.0 * B5 + 12.0 * B2 * B5 -
           14.0 * B6 + 4.0 * B2 * B6 + 24.0 * B8 + 12.0 * B7 - 12.0 * B2 * B7 - 24.0 * B14);
  L[16] =
      4.0 / 3.0 * kI *
      (-9.0 + 15.0 * B1 + 6.0 * B1 * B1 + 19.0 * B2 - 11.0 * B1 * B2 - 24.0 * B3 -
       6.0 * B1 * B3 + 6.0 * B2 * B3 - 12.0 * B3 * B3 + 18.0 * B4 - 24.0 * B1 * B4 +
       6.0 * B1 * B1 * B4 - 30.0 * B2 * B4 + 12.0 * B1 * B2 * B4 + 42.0 * B3 * B4 -
       24.0 * B1 * B3 * B4 + 6.0 * B4 * B4 - 6.0 * B1 * B4 * B4 + 6.0 * B5 -
       48.0 * B1 * B5 + 12.0 * B2 * B5 - 12.0 * B4 * B5 - 18.0 * B6 - 4.0 * B2 * B6 +
       8.0 * B1 * B2 * B6 - 12.0 * B4 * B6 - 12.0 * B7 - 12.0 * B2 * B7 + 48.0 * B3 * B7 +
       24.0 * B4 * B7 + 24.0 * B1 * B8 + 48.0 * B1 * B9 + 24.0 * B10 - 12.0 * B1 * B10 -
       24.0 * B11 + 96.0 * B13 - 24.0 * B14 - 96.0 * B15);
  L[17] =
      4.0 / 3.0 * kI *
      (-9.0 + 15.0 * B2 + 6.0 * B2 * B2 + 19.0 * B1 - 11.0 * B1 * B2 - 24.0 * B3 -
       6.0 * B2 * B3 + 6.0 * B1 * B3 - 12.0 * B3 * B3 + 18.0 * B4 - 24.0 * B2 * B4 +
       6.0 * B2 * B2 * B4 - 30.0 * B1 * B4 + 12.0 * B1 * B2 * B4 + 42.0 * B3 * B4 -
       24.0 * B2 * B3 * B4 + 6.0 * B4 * B4 - 6.0 * B2 * B4 * B4 + 6.0 * B5 -
       48.0 * B2 * B5 + 12.0 * B1 * B5 - 12.0 * B4 * B5 - 18.0 * B6 - 4.0 * B1 * B6 +
       8.0 * B1 * B2 * B6 - 12.0 * B4 * B6 - 12.0 * B8 - 12.0 * B1 * B8 + 48.0 * B3 * B8 +
       24.0 * B4 * B8 + 24.0 * B2 * B7 + 48.0 * B2 * B9 + 24.0 * B10 - 12.0 * B2 * B10 -
       24.0 * B12 + 96.0 * B14 - 24.0 * B13 - 96.0 * B16);

  return L;
}

MakhlinVector L_from_B(const BargmannVector& B, double* max_imag_residue) {
  const std::array<cplx, 18> L = L_from_B_complex(B);
  MakhlinVector out;
  double residue = 0.0;
  for (int k = 0; k < 18; ++k) {
    out[static_cast<std::size_t>(k)] = L[static_cast<std::size_t>(k)].real();
    residue = std::max(residue, std::abs(L[static_cast<std::size_t>(k)].imag()));
  }
  if (max_imag_residue) *max_imag_residue = residue;
  return out;
}

CharCoeffs char_coeffs(const StateParams& sp) {
  const MakhlinVector L = makhlin_L(sp);
  const double L1 = L[0], L2 = L[1], L3 = L[2], L4 = L[3], L5 = L[4], L7 = L[6], L8 = L[7],
               L12 = L[11], L14 = L[13];
  CharCoeffs c;
  c.p = -2.0 * (L2 + L4 + L7);
  c.q = -8.0 * (L12 - L1);
  c.r = L2 * L2 + 2.0 * (L4 + L7) * L2 + (L4 - L7) * (L4 - L7) - 4.0 * (L3 + L5 + L8) +
        8.0 * L14;
  return c;
}

CharCoeffs char_coeffs_pt(const StateParams& sp) {
  const Vec3 &a = sp.a, &b = sp.b;
  const Mat3& C = sp.C;
  const double na = a.squaredNorm(), nb = b.squaredNorm(), nc = frob3<double>(C, C);
  const Mat3 CtC = C.transpose() * C;
  CharCoeffs c;
  c.p = -2.0 * (na + nb + nc);
  c.q = -8.0 * (a.dot(C * b) + C.determinant());
  c.r = (na - nb) * (na - nb) + 2.0 * (na + nb) * nc + 2.0 * frob3<double>(CtC, CtC) -
        nc * nc - 4.0 * (a.dot(C * C.transpose() * a) + b.dot(CtC * b)) -
        8.0 * a.dot(cofactor_matrix<double>(C) * b);
  return c;
}

double det_from_char_coeffs(const CharCoeffs& c) { return (c.p - c.q + c.r + 1.0) / 256.0; }

}  // namespace luinv
