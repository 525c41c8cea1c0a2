#include "luinv/reference.hpp"

namespace luinv::reference {

namespace {

constexpr cplx kI{0.0, 1.0};

Mat3c cm(const Mat3& m) { return m.cast<cplx>(); }
Vec3c cv(const Vec3& v) { return v.cast<cplx>(); }

}  // namespace

Mat3 omega_entrywise(const Mat3& m, const Mat3& n) {
  Mat3 w;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      w(p, q) = -frob3<double>(cross_generator(p) * m * cross_generator(q), n);
  return w;
}

Mat3 cofactor_expansion(const Mat3& m) {
  Mat3 c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // Rows/columns taken cyclically absorb the (-1)^{i+j} sign.
      c(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return c;
}

std::vector<double> elementary_via_determinant(const std::vector<double>& p) {
  std::vector<double> e(p.size());
  double factorial = 1.0;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    factorial *= static_cast<double>(k);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<int>(k), static_cast<int>(k));
    for (int i = 0; i < static_cast<int>(k); ++i) {
      for (int j = 0; j <= i; ++j) m(i, j) = p[static_cast<std::size_t>(i - j)];
      if (i + 1 < static_cast<int>(k)) m(i, i + 1) = static_cast<double>(i + 1);
    }
    e[k - 1] = m.determinant() / factorial;
  }
  return e;
}

BlochForm power2_closed(const BlochForm& b) {
  const cplx rr = dot3<cplx>(b.r, b.r), ss = dot3<cplx>(b.s, b.s), tt = frob3<cplx>(b.T, b.T);
  BlochForm p;
  p.t = b.t * b.t + rr + ss + tt;
  p.r = 2.0 * b.t * b.r + 2.0 * b.T * b.s;
  p.s = 2.0 * b.t * b.s + 2.0 * b.T.transpose() * b.r;
  p.T = 2.0 * b.t * b.T + 2.0 * b.r * b.s.transpose() - 2.0 * cofactor_matrix<cplx>(b.T);
  return p;
}

BlochForm power3_closed(const BlochForm& b) {
  const cplx t = b.t;
  const cplx rr = dot3<cplx>(b.r, b.r), ss = dot3<cplx>(b.s, b.s), tt = frob3<cplx>(b.T, b.T);
  const cplx rTs = dot3<cplx>(b.r, Vec3c(b.T * b.s));
  const cplx det = b.T.determinant();
  const Mat3c hT = cofactor_matrix<cplx>(b.T);
  BlochForm p;
  p.t = t * t * t + 3.0 * t * (rr + ss + tt) + 6.0 * (rTs - det);
  p.r = (3.0 * t * t + rr + 3.0 * ss + tt) * b.r + 2.0 * b.T * b.T.transpose() * b.r +
        6.0 * t * b.T * b.s - 2.0 * hT * b.s;
  p.s = (3.0 * t * t + 3.0 * rr + ss + tt) * b.s + 2.0 * b.T.transpose() * b.T * b.s +
        6.0 * t * b.T.transpose() * b.r - 2.0 * hT.transpose() * b.r;
  p.T = (3.0 * t * t + rr + ss + 3.0 * tt) * b.T + 6.0 * t * (b.r * b.s.transpose() - hT) +
        2.0 * (b.r * b.r.transpose() * b.T + b.T * b.s * b.s.transpose() -
               b.T * b.T.transpose() * b.T - omega<cplx>(b.T, b.r * b.s.transpose()));
  return p;
}

BlochForm power4_closed(const BlochForm& b) {
  const cplx t = b.t;
  const cplx rr = dot3<cplx>(b.r, b.r), ss = dot3<cplx>(b.s, b.s), tt = frob3<cplx>(b.T, b.T);
  const cplx rTs = dot3<cplx>(b.r, Vec3c(b.T * b.s));
  const cplx det = b.T.determinant();
  const Mat3c hT = cofactor_matrix<cplx>(b.T);
  const cplx rTTr = dot3<cplx>(b.r, Vec3c(b.T * b.T.transpose() * b.r));
  const cplx sTTs = dot3<cplx>(b.s, Vec3c(b.T.transpose() * b.T * b.s));
  const cplx rhTs = dot3<cplx>(b.r, Vec3c(hT * b.s));
  BlochForm p;
  p.t = t * t * t * t + rr * rr + ss * ss + tt * tt + 6.0 * rr * ss +
        6.0 * t * t * (rr + ss + tt) + 2.0 * (rr + ss) * tt +
        4.0 * (rTTr + sTTs + frob3<cplx>(hT, hT)) + 24.0 * t * (rTs - det) - 8.0 * rhTs;
  p.r = 4.0 * ((t * (t * t + rr + 3.0 * ss + tt) + 2.0 * rTs - 2.0 * det) * b.r +
               (3.0 * t * t + rr + ss + tt) * b.T * b.s +
               2.0 * t * b.T * b.T.transpose() * b.r - 2.0 * t * hT * b.s);
  p.s = 4.0 * ((t * (t * t + 3.0 * rr + ss + tt) + 2.0 * rTs - 2.0 * det) * b.s +
               (3.0 * t * t + rr + ss + tt) * b.T.transpose() * b.r +
               2.0 * t * b.T.transpose() * b.T * b.s - 2.0 * t * hT.transpose() * b.r);
  p.T = 4.0 * ((t * t * t + t * (rr + ss + 3.0 * tt) + 2.0 * rTs - 2.0 * det) * b.T +
               (3.0 * t * t + rr + ss + tt) * (b.r * b.s.transpose() - hT) +
               2.0 * t * (b.r * b.r.transpose() * b.T + b.T * b.s * b.s.transpose() -
                          b.T * b.T.transpose() * b.T - omega<cplx>(b.T, b.r * b.s.transpose())));
  return p;
}

BlochForm rho_power_coeffs(int k, const Vec3& a, const Vec3& b, const Mat3& C) {
  const double na = a.squaredNorm(), nb = b.squaredNorm(), nc = frob3<double>(C, C);
  const double acb = a.dot(C * b), det = C.determinant();
  const Mat3 hC = cofactor_matrix<double>(C);
  BlochForm p;
  switch (k) {
    case 2:
      p.t = 1.0 + na + nb + nc;
      p.r = cv(2.0 * a + 2.0 * C * b);
      p.s = cv(2.0 * b + 2.0 * C.transpose() * a);
      p.T = cm(2.0 * (C + a * b.transpose() - hC));
      return p;
    case 3:
      p.t = 1.0 + 3.0 * (na + nb + nc) + 6.0 * (acb - det);
      p.r = cv((3.0 + na + 3.0 * nb + nc) * a + 2.0 * C * C.transpose() * a + 6.0 * C * b -
               2.0 * hC * b);
      p.s = cv((3.0 + 3.0 * na + nb + nc) * b + 2.0 * C.transpose() * C * b +
               6.0 * C.transpose() * a - 2.0 * hC.transpose() * a);
      p.T = cm((3.0 + na + nb + 3.0 * nc) * C + 6.0 * (a * b.transpose() - hC) +
               2.0 * (a * a.transpose() * C + C * b * b.transpose() - C * C.transpose() * C -
                      omega<double>(C, a * b.transpose())));
      return p;
    case 4: {
      const double aCCa = a.dot(C * C.transpose() * a);
      const double bCCb = b.dot(C.transpose() * C * b);
      const double ahCb = a.dot(hC * b);
      p.t = 1.0 + 6.0 * (na + nb + na * nb) + na * na + nb * nb + nc * nc + 24.0 * acb +
            2.0 * nc * (3.0 + na + nb) + 4.0 * aCCa + 4.0 * bCCb + 4.0 * frob3<double>(hC, hC) -
            8.0 * ahCb - 24.0 * det;
      p.r = cv(4.0 * (1.0 + na + 3.0 * nb + nc + 2.0 * acb - 2.0 * det) * a +
               8.0 * C * C.transpose() * a + 4.0 * (3.0 + na + nb + nc) * C * b - 8.0 * hC * b);
      p.s = cv(4.0 * (1.0 + 3.0 * na + nb + nc + 2.0 * acb - 2.0 * det) * b +
               8.0 * C.transpose() * C * b + 4.0 * (3.0 + na + nb + nc) * C.transpose() * a -
               8.0 * hC.transpose() * a);
      p.T = cm(4.0 * (1.0 + na + nb + 3.0 * nc + 2.0 * acb - 2.0 * det) * C +
               4.0 * (3.0 + na + nb + nc) * (a * b.transpose() - hC) +
               8.0 * (a * a.transpose() * C + C * b * b.transpose() - C * C.transpose() * C -
                      omega<double>(C, a * b.transpose())));
      return p;
    }
    default:
      throw std::invalid_argument("rho_power_coeffs: k must be 2, 3 or 4");
  }
}

BlochForm xk_marginal_a(const BlochForm& xk, const Vec3& a) {
  const Vec3c ac = cv(a);
  BlochForm p;
  p.t = xk.t + dot3<cplx>(xk.r, ac);
  p.r = xk.r + xk.t * ac + kI * cross3<cplx>(xk.r, ac);
  p.s = xk.s + xk.T.transpose() * ac;
  p.T = ac * xk.s.transpose() + xk.T - kI * cross_matrix<cplx>(ac).transpose() * xk.T;
  return p;
}

BlochForm xk_marginal_b(const BlochForm& xk, const Vec3& b) {
  const Vec3c bc = cv(b);
  BlochForm p;
  p.t = xk.t + dot3<cplx>(xk.s, bc);
  p.r = xk.r + xk.T * bc;
  p.s = xk.s + xk.t * bc + kI * cross3<cplx>(xk.s, bc);
  p.T = xk.r * bc.transpose() + xk.T - kI * xk.T * cross_matrix<cplx>(bc);
  return p;
}

BlochForm xk_marginal_ab(const BlochForm& xk, const Vec3& a, const Vec3& b) {
  const Vec3c ac = cv(a), bc = cv(b);
  const Mat3c ab = ac * bc.transpose();
  BlochForm p;
  p.t = xk.t + dot3<cplx>(xk.r, ac) + dot3<cplx>(xk.s, bc) + dot3<cplx>(ac, Vec3c(xk.T * bc));
  p.r = xk.r + (xk.t + dot3<cplx>(xk.s, bc)) * ac + xk.T * bc +
        kI * (cross3<cplx>(xk.r, ac) + cross3<cplx>(Vec3c(xk.T * bc), ac));
  p.s = xk.s + (xk.t + dot3<cplx>(xk.r, ac)) * bc + xk.T.transpose() * ac +
        kI * (cross3<cplx>(xk.s, bc) + cross3<cplx>(Vec3c(xk.T.transpose() * ac), bc));
  p.T = xk.r * bc.transpose() + ac * xk.s.transpose() + xk.t * ab + xk.T -
        omega<cplx>(xk.T, ab) + kI * (psi<cplx>(xk.r, ab, xk.s) - psi<cplx>(ac, xk.T, bc));
  return p;
}

BlochForm rhok_marginal_a(int k, const Vec3& a, const Vec3& b, const Mat3& C) {
  const double na = a.squaredNorm(), nb = b.squaredNorm(), nc = frob3<double>(C, C);
  const double acb = a.dot(C * b), det = C.determinant();
  const Mat3 hC = cofactor_matrix<double>(C);
  const Vec3c ac = cv(a);
  BlochForm p;
  switch (k) {
    case 1:
      p.t = 1.0 + na;
      p.r = cv(2.0 * a);
      p.s = cv(b + C.transpose() * a);
      p.T = cm(C + a * b.transpose()) - kI * cross_matrix<cplx>(ac).transpose() * cm(C);
      return p;
    case 2:
      p.t = 1.0 + 3.0 * na + nb + nc + 2.0 * acb;
      p.r = cv((3.0 + na + nb + nc) * a + 2.0 * C * b) + 2.0 * kI * cross3<cplx>(cv(C * b), ac);
      p.s = cv(2.0 * (1.0 + na) * b + 4.0 * C.transpose() * a - 2.0 * hC.transpose() * a);
      p.T = cm(2.0 * (C - hC) + 2.0 * a * a.transpose() * C + 4.0 * a * b.transpose()) -
            2.0 * kI * cross_matrix<cplx>(ac).transpose() * cm(C - hC);
      return p;
    case 3: {
      const double aCCa = a.dot(C * C.transpose() * a);
      const double ahCb = a.dot(hC * b);
      p.t = 1.0 + 6.0 * na + na * na + 3.0 * nb * (1.0 + na) + (3.0 + na) * nc + 12.0 * acb +
            2.0 * aCCa - 6.0 * det - 2.0 * ahCb;
      const Vec3 w = C * C.transpose() * a + 3.0 * C * b - hC * b;
      p.r = cv((4.0 + 4.0 * na + 6.0 * nb + 4.0 * nc + 6.0 * acb - 6.0 * det) * a + 2.0 * w) +
            2.0 * kI * cross3<cplx>(cv(w), ac);
      p.s = cv((3.0 + 9.0 * na + nb + nc + 2.0 * acb) * b + 2.0 * C.transpose() * C * b +
               (9.0 + 3.0 * na + nb + 3.0 * nc) * C.transpose() * a -
               2.0 * C.transpose() * C * C.transpose() * a - 8.0 * hC.transpose() * a);
      const Mat3 bracket = (3.0 + na + nb + 3.0 * nc) * C - 6.0 * hC +
                           2.0 * (C * b * b.transpose() - C * C.transpose() * C -
                                  omega<double>(C, a * b.transpose()));
      p.T = cm((3.0 + na + nb + 3.0 * nc) * C - 6.0 * hC +
               2.0 * a * a.transpose() * (4.0 * C - hC) + 2.0 * C * b * b.transpose() +
               2.0 * a * b.transpose() * C.transpose() * C +
               (9.0 + 3.0 * na + nb + nc) * a * b.transpose() - 2.0 * C * C.transpose() * C -
               2.0 * omega<double>(C, a * b.transpose())) -
            kI * cross_matrix<cplx>(ac).transpose() * cm(bracket);
      return p;
    }
    default:
      throw std::invalid_argument("rhok_marginal_a: k must be 1, 2 or 3");
  }
}

BlochForm rhok_marginal_b(int k, const Vec3& a, const Vec3& b, const Mat3& C) {
  const double na = a.squaredNorm(), nb = b.squaredNorm(), nc = frob3<double>(C, C);
  const double acb = a.dot(C * b), det = C.determinant();
  const Mat3 hC = cofactor_matrix<double>(C);
  const Vec3c bc = cv(b);
  BlochForm p;
  switch (k) {
    case 1:
      p.t = 1.0 + nb;
      p.r = cv(a + C * b);
      p.s = cv(2.0 * b);
      p.T = cm(C + a * b.transpose()) - kI * cm(C) * cross_matrix<cplx>(bc);
      return p;
    case 2:
      p.t = 1.0 + na + 3.0 * nb + nc + 2.0 * acb;
      p.r = cv(2.0 * (1.0 + nb) * a + 4.0 * C * b - 2.0 * hC * b);
      p.s = cv((3.0 + na + nb + nc) * b + 2.0 * C.transpose() * a) +
            2.0 * kI * cross3<cplx>(cv(C.transpose() * a), bc);
      p.T = cm(2.0 * (C - hC) + 2.0 * C * b * b.transpose() + 4.0 * a * b.transpose()) -
            2.0 * kI * cm(C - hC) * cross_matrix<cplx>(bc);
      return p;
    case 3: {
      const double bCCb = b.dot(C.transpose() * C * b);
      const double ahCb = a.dot(hC * b);
      p.t = 1.0 + 6.0 * nb + nb * nb + 3.0 * na * (1.0 + nb) + (3.0 + nb) * nc + 12.0 * acb +
            2.0 * bCCb - 6.0 * det - 2.0 * ahCb;
      p.r = cv((3.0 + na + 9.0 * nb + nc + 2.0 * acb) * a + 2.0 * C * C.transpose() * a +
               (9.0 + na + 3.0 * nb + 3.0 * nc) * C * b - 2.0 * C * C.transpose() * C * b -
               8.0 * hC * b);
      const Vec3 w = C.transpose() * C * b + 3.0 * C.transpose() * a - hC.transpose() * a;
      p.s = cv((4.0 + 6.0 * na + 4.0 * nb + 4.0 * nc + 6.0 * acb - 6.0 * det) * b + 2.0 * w) +
            2.0 * kI * cross3<cplx>(cv(w), bc);
      const Mat3 bracket = (3.0 + na + nb + 3.0 * nc) * C - 6.0 * hC +
                           2.0 * (a * a.transpose() * C - C * C.transpose() * C -
                                  omega<double>(C, a * b.transpose()));
      p.T = cm((3.0 + na + nb + 3.0 * nc) * C - 6.0 * hC +
               2.0 * (4.0 * C - hC) * b * b.transpose() + 2.0 * a * a.transpose() * C +
               2.0 * C * C.transpose() * a * b.transpose() +
               (9.0 + na + 3.0 * nb + nc) * a * b.transpose() - 2.0 * C * C.transpose() * C -
               2.0 * omega<double>(C, a * b.transpose())) -
            kI * cm(bracket) * cross_matrix<cplx>(bc);
      return p;
    }
    default:
      throw std::invalid_argument("rhok_marginal_b: k must be 1, 2 or 3");
  }
}

BlochForm rhok_marginal_ab(int k, const Vec3& a, const Vec3& b, const Mat3& C) {
  const double na = a.squaredNorm(), nb = b.squaredNorm(), nc = frob3<double>(C, C);
  const double acb = a.dot(C * b), det = C.determinant();
  const Mat3 hC = cofactor_matrix<double>(C);
  const Mat3 ab = a * b.transpose();
  const Vec3c ac = cv(a), bc = cv(b);
  BlochForm p;
  switch (k) {
    case 1:
      p.t = 1.0 + na + nb + acb;
      p.r = cv((2.0 + nb) * a + C * b) + kI * cross3<cplx>(cv(C * b), ac);
      p.s = cv((2.0 + na) * b + C.transpose() * a) + kI * cross3<cplx>(cv(C.transpose() * a), bc);
      p.T = cm(C + 3.0 * ab - omega<double>(C, ab)) - kI * psi<cplx>(ac, cm(C), bc);
      return p;
    case 2: {
      const double ahCb = a.dot(hC * b);
      p.t = 1.0 + 3.0 * na + 3.0 * nb + 2.0 * na * nb + nc + 6.0 * acb - 2.0 * ahCb;
      const Vec3 u = 2.0 * C * b - hC * b;
      p.r = cv((3.0 + na + 5.0 * nb + nc + 2.0 * acb) * a + 2.0 * u) +
            2.0 * kI * cross3<cplx>(cv(u), ac);
      const Vec3 v = 2.0 * C.transpose() * a - hC.transpose() * a;
      p.s = cv((3.0 + 5.0 * na + nb + nc + 2.0 * acb) * b + 2.0 * v) +
            2.0 * kI * cross3<cplx>(cv(v), bc);
      p.T = cm(2.0 * (C - hC) + 2.0 * (a * a.transpose() * C + C * b * b.transpose()) +
               (7.0 + na + nb + nc) * ab - 2.0 * omega<double>(C - hC, ab)) +
            2.0 * kI * (psi<cplx>(cv(C * b), cm(ab), cv(C.transpose() * a)) -
                        psi<cplx>(ac, cm(C - hC), bc));
      return p;
    }
    case 3: {
      const double aCCa = a.dot(C * C.transpose() * a);
      const double bCCb = b.dot(C.transpose() * C * b);
      const double ahCb = a.dot(hC * b);
      const double aCCCb = a.dot(C * C.transpose() * C * b);
      p.t = 1.0 + 6.0 * (na + nb) + 12.0 * na * nb + na * na + nb * nb + (3.0 + na + nb) * nc +
            3.0 * (7.0 + na + nb + nc) * acb - 10.0 * ahCb - 6.0 * det +
            2.0 * (aCCa + bCCb - aCCCb);
      const Vec3 u = 2.0 * C * C.transpose() * a + (9.0 + na + 3.0 * nb + 3.0 * nc) * C * b -
                     8.0 * hC * b - 2.0 * C * C.transpose() * C * b;
      p.r = cv((4.0 + 4.0 * na + 15.0 * nb + nb * nb + 4.0 * nc + (3.0 * na + nc) * nb +
                14.0 * acb + 2.0 * bCCb - 2.0 * ahCb - 6.0 * det) *
                   a +
               u) +
            kI * cross3<cplx>(cv(u), ac);
      const Vec3 v = 2.0 * C.transpose() * C * b +
                     (9.0 + 3.0 * na + nb + 3.0 * nc) * C.transpose() * a -
                     8.0 * hC.transpose() * a - 2.0 * C.transpose() * C * C.transpose() * a;
      p.s = cv((4.0 + 15.0 * na + na * na + 4.0 * nb + 4.0 * nc + (3.0 * nb + nc) * na +
                14.0 * acb + 2.0 * aCCa - 2.0 * ahCb - 6.0 * det) *
                   b +
               v) +
            kI * cross3<cplx>(cv(v), bc);
      p.T = cm((3.0 + na + nb + 2.0 * na * nb + 3.0 * nc) * C +
               2.0 * (4.0 - nb) * a * a.transpose() * C + 2.0 * (4.0 - na) * C * b * b.transpose() +
               (13.0 + 7.0 * (na + nb) + 5.0 * nc + 8.0 * acb - 6.0 * det) * ab - 6.0 * hC +
               2.0 * (C * C.transpose() * ab + ab * C.transpose() * C - C * C.transpose() * C -
                      a * a.transpose() * hC - hC * b * b.transpose()) -
               omega<double>(
                   (5.0 + na + nb + 3.0 * nc) * C - 2.0 * C * C.transpose() * C - 6.0 * hC, ab)) +
            kI * psi<cplx>(cv(2.0 * C * C.transpose() * a + 6.0 * C * b - 2.0 * hC * b), cm(ab),
                           cv(2.0 * C.transpose() * C * b + 6.0 * C.transpose() * a -
                              2.0 * hC.transpose() * a)) -
            kI * ((3.0 + na + nb + 3.0 * nc) * psi<cplx>(ac, cm(C), bc) -
                  6.0 * psi<cplx>(ac, cm(hC), bc) -
                  2.0 * psi<cplx>(ac, cm(C * C.transpose() * C), bc)) +
            2.0 * kI * (nb * cross_matrix<cplx>(ac) * cm(C) +
                        na * cm(C) * cross_matrix<cplx>(bc).transpose());
      return p;
    }
    default:
      throw std::invalid_argument("rhok_marginal_ab: k must be 1, 2 or 3");
  }
}

}  // namespace luinv::reference
