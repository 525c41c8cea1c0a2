#include "luinv/invariants.hpp"

namespace luinv {

namespace {
constexpr cplx kI{0.0, 1.0};
}

cplx multivariate_trace(const std::vector<Eigen::MatrixXcd>& ms) {
  if (ms.empty()) throw std::invalid_argument("multivariate_trace: empty word");
  const auto n = ms.front().rows();
  if (ms.front().cols() != n) throw std::invalid_argument("multivariate_trace: matrix not square");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& m : ms) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("multivariate_trace: dimension mismatch");
    acc = acc * m;
  }
  return acc.trace();
}

MakhlinVector makhlin_L(const StateParams& p) {
  const Vec3 &a = p.a, &b = p.b;
  const Mat3& C = p.C;
  const Mat3 hC = cofactor_matrix<double>(C);
  const Mat3 CCt = C * C.transpose();
  const Mat3 CtC = C.transpose() * C;
  MakhlinVector L;
  L[0] = C.determinant();
  L[1] = frob3<double>(C, C);
  L[2] = frob3<double>(hC, hC);
  L[3] = a.dot(a);
  L[4] = a.dot(CCt * a);
  L[5] = a.dot(cofactor_matrix<double>(CCt) * a);
  L[6] = b.dot(b);
  L[7] = b.dot(CtC * b);
  L[8] = b.dot(cofactor_matrix<double>(CtC) * b);
  L[9] = a.dot(cross(CCt * a, cofactor_matrix<double>(CCt) * a));
  L[10] = b.dot(cross(CtC * b, cofactor_matrix<double>(CtC) * b));
  L[11] = a.dot(C * b);
  L[12] = a.dot(C * C.transpose() * C * b);
  L[13] = a.dot(hC * b);
  L[14] = b.dot(cross(C.transpose() * a, hC.transpose() * a));
  L[15] = a.dot(cross(C * b, hC * b));
  L[16] = (hC * b).dot(cross(a, CCt * a));
  L[17] = (hC.transpose() * a).dot(cross(b, CtC * b));
  return L;
}

MakhlinVector makhlin_I(const StateParams& p) {
  const Vec3 &a = p.a, &b = p.b;
  const Mat3& C = p.C;
  const Mat3 CCt = C * C.transpose();
  const Mat3 CtC = C.transpose() * C;
  MakhlinVector I;
  I[0] = C.determinant();
  I[1] = frob3<double>(C, C);
  I[2] = frob3<double>(CtC, CtC);
  I[3] = a.dot(a);
  I[4] = a.dot(CCt * a);
  I[5] = a.dot(CCt * CCt * a);
  I[6] = b.dot(b);
  I[7] = b.dot(CtC * b);
  I[8] = b.dot(CtC * CtC * b);
  I[9] = a.dot(cross(CCt * a, CCt * CCt * a));
  I[10] = b.dot(cross(CtC * b, CtC * CtC * b));
  I[11] = a.dot(C * b);
  I[12] = a.dot(C * C.transpose() * C * b);
  I[13] = frob3<double>(cross_matrix<double>(a) * C, C * cross_matrix<double>(b));
  I[14] = a.dot(cross(CCt * a, C * b));
  I[15] = (C.transpose() * a).dot(cross(b, CtC * b));
  I[16] = (C.transpose() * a).dot(cross(CtC * C.transpose() * a, b));
  I[17] = a.dot(cross(C * b, C * CtC * b));
  return I;
}

BargmannVector bargmann_direct(const Mat4c& rho) {
  const Mat2c id2 = Mat2c::Identity();
  const Mat4c x0 = rho;
  const Mat4c x1 = kron22(partial_trace(rho, Subsystem::A), id2);
  const Mat4c x2 = kron22(id2, partial_trace(rho, Subsystem::B));
  const Mat4c x0_2 = x0 * x0;
  const Mat4c x0_3 = x0_2 * x0;
  const Mat4c x0_4 = x0_2 * x0_2;
  BargmannVector B;
  B[0] = (x0 * x1).trace();
  B[1] = (x0 * x2).trace();
  B[2] = (x0 * x1 * x2).trace();
  B[3] = x0_2.trace();
  B[4] = (x0_2 * x1 * x2).trace();
  B[5] = x0_3.trace();
  B[6] = (x0_3 * x1).trace();
  B[7] = (x0_3 * x2).trace();
  B[8] = (x0_3 * x1 * x2).trace();
  B[9] = x0_4.trace();
  B[10] = (x0_2 * x1 * x0_2 * x1).trace();
  B[11] = (x0_2 * x2 * x0_2 * x2).trace();
  B[12] = (x0 * x1 * x2 * x0_2 * x1).trace();
  B[13] = (x0 * x1 * x2 * x0_2 * x2).trace();
  B[14] = (x0 * x1 * x2 * x0_3 * x1).trace();
  B[15] = (x0 * x1 * x2 * x0_3 * x2).trace();
  B[16] = (x0 * x1 * x0_2 * x1 * x0_3 * x1).trace();
  B[17] = (x0 * x2 * x0_2 * x2 * x0_3 * x2).trace();
  return B;
}

BargmannVector bargmann_from_L(const MakhlinVector& L) {
  const double L1 = L[0], L2 = L[1], L3 = L[2], L4 = L[3], L5 = L[4], L6 = L[5], L7 = L[6],
               L8 = L[7], L9 = L[8], L10 = L[9], L11 = L[10], L12 = L[11], L13 = L[12],
               L14 = L[13], L15 = L[14], L16 = L[15], L17 = L[16], L18 = L[17];
  BargmannVector B;
  B[0] = (1 + L4) / 2;
  B[1] = (1 + L7) / 2;
  B[2] = (1 + L4 + L7 + L12) / 4;
  B[3] = (1 + L2 + L4 + L7) / 4;
  B[4] = (1 + L2 + 3 * L4 + 3 * L7 + 2 * L4 * L7 + 6 * L12 - 2 * L14) / 16;
  B[5] = (1 - 6 * L1 + 3 * L2 + 3 * L4 + 3 * L7 + 6 * L12) / 16;
  B[6] = (1 - 6 * L1 + L2 * (3 + L4) + 6 * L4 + L4 * L4 + 2 * L5 + 3 * (1 + L4) * L7 +
          12 * L12 - 2 * L14) /
         32;
  B[7] = (1 - 6 * L1 + L2 * (3 + L7) + 6 * L7 + L7 * L7 + 2 * L8 + 3 * (1 + L7) * L4 +
          12 * L12 - 2 * L14) /
         32;
  B[8] = (1 + 6 * (L4 + L7) + 12 * L4 * L7 + L4 * L4 + L7 * L7 + (3 + L4 + L7) * L2 +
          3 * (7 + L2 + L4 + L7) * L12 + 2 * (L5 + L8) - 6 * L1 - 2 * L13 - 10 * L14) /
         64;
  B[9] = (1 + 6 * (L4 + L7 + L4 * L7) + L4 * L4 + L7 * L7 + (6 + L2 + 2 * L4 + 2 * L7) * L2 +
          24 * L12 + 4 * (L3 + L5 + L8 - 2 * L14 - 6 * L1)) /
         64;
  B[10] = (8 * L12 * L12 + 8 * L12 * (6 + 6 * L4 + L7 + L2) + 4 * (7 + L4) * L5 -
           8 * (3 + L4) * L14 + 8 * L6 + 4 * (1 - L4) * L8 - 8 * (3 + L4) * L1 +
           4 * (1 - L4) * L3 + (1 + L4) * L2 * L2 + 2 * (1 + L4) * (3 + L4 + L7) * L2 +
           (1 + 15 * L4 + 15 * L4 * L4 + L4 * L4 * L4 + 6 * L7 + 36 * L4 * L7 +
            6 * L4 * L4 * L7 + L7 * L7 + L4 * L7 * L7)) /
          256;
  B[11] = (8 * L12 * L12 + 8 * L12 * (6 + 6 * L7 + L4 + L2) + 4 * (7 + L7) * L8 -
           8 * (3 + L7) * L14 + 8 * L9 + 4 * (1 - L7) * L5 - 8 * (3 + L7) * L1 +
           4 * (1 - L7) * L3 + (1 + L7) * L2 * L2 + 2 * (1 + L7) * (3 + L4 + L7) * L2 +
           (1 + 15 * L7 + 15 * L7 * L7 + L7 * L7 * L7 + 6 * L4 + 36 * L4 * L7 +
            6 * L7 * L7 * L4 + L4 * L4 + L7 * L4 * L4)) /
          256;
  B[12] = (4 * L12 * L12 + L12 * (30 + 6 * L7 + 18 * L4 + 2 * L2) +
           (3 + L4 + L7 + L4 * L7) * L2 + 2 * (1 - L4) * L8 + 8 * L5 - 2 * (5 + L4) * L14 -
           2 * (3 - L4) * L1 + 4.0 * kI * L15 +
           (1 + 6 * L7 + L7 * L7 + 10 * L4 + 27 * L4 * L7 + L7 * L7 * L4 + 5 * L4 * L4 +
            3 * L7 * L4 * L4)) /
          128.0;
  B[13] = (4 * L12 * L12 + L12 * (30 + 6 * L4 + 18 * L7 + 2 * L2) +
           (3 + L4 + L7 + L4 * L7) * L2 + 2 * (1 - L7) * L5 + 8 * L8 - 2 * (5 + L7) * L14 -
           2 * (3 - L7) * L1 + 4.0 * kI * L16 +
           (1 + 6 * L4 + L4 * L4 + 10 * L7 + 27 * L4 * L7 + L4 * L4 * L7 + 5 * L7 * L7 +
            3 * L4 * L7 * L7)) /
          128.0;
  B[14] =
      (1 + L4 * L4 * L4 + 26 * L7 * L4 * L4 + 15 * L4 * L4 + 13 * L7 * L7 * L4 +
       76 * L4 * L7 + 15 * L4 + 5 * L7 * L7 + 4 * L3 + 10 * L7 - L2 * L2 * (L4 - 1) +
       26 * L5 + 12 * L8 + 6 * (L4 + L7) * L5 - 4 * L6 + 68 * L12 + 88 * L4 * L12 +
       4 * L4 * L4 * L12 + 4 * L5 * L12 + 44 * L7 * L12 + 12 * L4 * L7 * L12 +
       28 * L12 * L12 - 4 * L1 * (6 + 2 * L7 + L4 * (L7 + 4) + 3 * L12) +
       2 * L2 * (3 + L5 + 3 * L7 + 12 * L12 + L4 * (4 * L7 + 2 * L12 + 5)) - 4 * L4 * L13 -
       4 * L13 - 12 * L4 * L14 - 4 * L7 * L14 - 4 * L12 * L14 - 44 * L14 +
       kI * (16 * L15 - 4 * L16 + 4 * L17)) /
      512.0;
  B[15] =
      (1 + L7 * L7 * L7 + 26 * L4 * L7 * L7 + 15 * L7 * L7 + 13 * L4 * L4 * L7 +
       76 * L4 * L7 + 15 * L7 + 5 * L4 * L4 + 4 * L3 + 10 * L4 - L2 * L2 * (L7 - 1) +
       26 * L8 + 12 * L5 + 6 * (L4 + L7) * L8 - 4 * L9 + 68 * L12 + 88 * L7 * L12 +
       4 * L7 * L7 * L12 + 4 * L8 * L12 + 44 * L4 * L12 + 12 * L4 * L7 * L12 +
       28 * L12 * L12 - 4 * L1 * (6 + 2 * L4 + L7 * (L4 + 4) + 3 * L12) +
       2 * L2 * (3 + L8 + 3 * L4 + 12 * L12 + L7 * (4 * L4 + 2 * L12 + 5)) - 4 * L7 * L13 -
       4 * L13 - 12 * L7 * L14 - 4 * L4 * L14 - 4 * L12 * L14 - 44 * L14 +
       kI * (16 * L16 - 4 * L15 + 4 * L18)) /
      512.0;
  B[16] =
      (1 + L7 * L7 * L7 + 15 * L7 * L7 + 12 * L3 * L7 + 15 * L7 + 48 * L1 * L1 + 60 * L3 -
       L2 * L2 * L2 * (L4 - 1) + 36 * L4 + 48 * L3 * L4 + 315 * L4 * L7 +
       3 * L4 * L7 * L7 * L7 + 150 * L4 * L7 * L7 + 75 * L4 * L4 * L7 * L7 + 126 * L4 * L4 -
       12 * L3 * L4 * L4 + 525 * L4 * L4 * L7 + 9 * L4 * L4 * L4 * L4 + 84 * L4 * L4 * L4 +
       105 * L4 * L4 * L4 * L7 + 60 * L8 + 48 * L4 * L8 + 12 * L7 * L8 - 4 * L4 * L7 * L8 -
       4 * L9 * L4 - 12 * L8 * L4 * L4 + 4 * L5 * L7 * L7 + 224 * L5 + 132 * L5 * L7 +
       448 * L4 * L5 - 4 * L5 * L8 + 108 * L4 * L7 * L5 + 96 * L4 * L4 * L5 + 32 * L5 * L5 +
       8 * L4 * L6 - 12 * L7 * L6 + 24 * L6 + 24 * L3 * L12 + 300 * L7 * L12 + 210 * L12 +
       18 * L12 * L7 * L7 + 1050 * L4 * L12 + 24 * L8 * L12 + 600 * L4 * L7 * L12 -
       8 * L3 * L4 * L12 + 30 * L4 * L4 * L4 * L12 + 60 * L4 * L4 * L7 * L12 +
       630 * L4 * L4 * L12 + 6 * L4 * L7 * L7 * L12 - 8 * L4 * L8 * L12 + 336 * L5 * L12 +
       48 * L4 * L5 * L12 - 16 * L6 * L12 + 8 * L5 * L7 * L12 + 16 * L12 * L12 * L12 +
       552 * L12 * L12 + 312 * L4 * L12 * L12 + 40 * L7 * L12 * L12 + 8 * L12 * L13 +
       L2 * L2 * (4 * L5 + (L4 + 3) * L7 - L4 * (L4 + 2 * (L12 - 9)) + 18 * L12 + 15) +
       L2 * ((5 * L4 + 3) * L7 * L7 +
             2 * (21 * L4 * L4 + 84 * L4 + 4 * L5 + 2 * (L4 + 9) * L12 + 15) * L7 +
             36 * L12 * L12 - 4 * L3 * (L4 - 3) + 91 * L4 + 132 * L5 +
             L4 * (L4 * (9 * L4 + 77) + 44 * L5 - 4 * L8) - 8 * L6 + 12 * L8 +
             4 * (3 * L4 * (L4 + 22) + 2 * L5) * L12 + 300 * L12 - 96 * L14 + 15) -
       400 * L4 * L14 - 48 * L4 * L7 * L14 - 96 * L7 * L14 - 240 * L14 - 64 * L4 * L4 * L14 -
       48 * L5 * L14 + 20 * L14 * L14 - 32 * L4 * L12 * L14 - 256 * L12 * L14 +
       8 * L1 *
           (L2 * ((L4 - 6) * L4 - 15) - 10 * L5 + ((L4 - 16) * L4 - 15) * L7 - 48 * L12 +
            6 * L14 - L4 * (L4 * (L4 + 27) + 12 * L12 - 2 * L14 + 61) - 15) +
       16.0 * kI * (L4 * L18 - L12 * L15 - L10)) /
      8192.0;
  B[17] =
      (1 + L4 * L4 * L4 + 15 * L4 * L4 + 12 * L3 * L4 + 15 * L4 + 48 * L1 * L1 + 60 * L3 -
       L2 * L2 * L2 * (L7 - 1) + 36 * L7 + 48 * L3 * L7 + 315 * L4 * L7 +
       3 * L7 * L4 * L4 * L4 + 150 * L7 * L4 * L4 + 75 * L4 * L4 * L7 * L7 + 126 * L7 * L7 -
       12 * L3 * L7 * L7 + 525 * L7 * L7 * L4 + 9 * L7 * L7 * L7 * L7 + 84 * L7 * L7 * L7 +
       105 * L7 * L7 * L7 * L4 + 60 * L5 + 48 * L7 * L5 + 12 * L4 * L5 - 4 * L4 * L7 * L5 -
       4 * L6 * L7 - 12 * L5 * L7 * L7 + 4 * L8 * L4 * L4 + 224 * L8 + 132 * L8 * L4 +
       448 * L7 * L8 - 4 * L5 * L8 + 108 * L4 * L7 * L8 + 96 * L7 * L7 * L8 + 32 * L8 * L8 +
       8 * L7 * L9 - 12 * L4 * L9 + 24 * L9 + 24 * L3 * L12 + 300 * L4 * L12 + 210 * L12 +
       18 * L12 * L4 * L4 + 1050 * L7 * L12 + 24 * L5 * L12 + 600 * L4 * L7 * L12 -
       8 * L3 * L7 * L12 + 30 * L7 * L7 * L7 * L12 + 60 * L7 * L7 * L4 * L12 +
       630 * L7 * L7 * L12 + 6 * L7 * L4 * L4 * L12 - 8 * L7 * L5 * L12 + 336 * L8 * L12 +
       48 * L7 * L8 * L12 - 16 * L9 * L12 + 8 * L4 * L8 * L12 + 16 * L12 * L12 * L12 +
       552 * L12 * L12 + 312 * L7 * L12 * L12 + 40 * L4 * L12 * L12 + 8 * L12 * L13 +
       L2 * L2 * (4 * L8 + (L7 + 3) * L4 - L7 * (L7 + 2 * (L12 - 9)) + 18 * L12 + 15) +
       L2 * ((5 * L7 + 3) * L4 * L4 +
             2 * (21 * L7 * L7 + 84 * L7 + 4 * L8 + 2 * (L7 + 9) * L12 + 15) * L4 +
             36 * L12 * L12 - 4 * L3 * (L7 - 3) + 91 * L7 + 132 * L8 +
             L7 * (L7 * (9 * L7 + 77) + 44 * L8 - 4 * L5) - 8 * L9 + 12 * L5 +
             4 * (3 * L7 * (L7 + 22) + 2 * L8) * L12 + 300 * L12 - 96 * L14 + 15) -
       400 * L7 * L14 - 48 * L4 * L7 * L14 - 96 * L4 * L14 - 240 * L14 - 64 * L7 * L7 * L14 -
       48 * L8 * L14 + 20 * L14 * L14 - 32 * L7 * L12 * L14 - 256 * L12 * L14 +
       8 * L1 *
           (L2 * ((L7 - 6) * L7 - 15) - 10 * L8 + ((L7 - 16) * L7 - 15) * L4 - 48 * L12 +
            6 * L14 - L7 * (L7 * (L7 + 27) + 12 * L12 - 2 * L14 + 61) - 15) +
       16.0 * kI * (L7 * L17 - L12 * L16 - L11)) /
      8192.0;
  return B;
}

}  // namespace luinv
