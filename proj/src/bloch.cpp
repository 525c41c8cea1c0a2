#include "luinv/bloch.hpp"

#include <array>

namespace luinv {

namespace {
constexpr cplx kI{0.0, 1.0};
}

const Mat2c& pauli(int k) {
  static const std::array<Mat2c, 4> sigma = [] {
    std::array<Mat2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(k));
}

Mat4c kron22(const Mat2c& a, const Mat2c& b) {
  Mat4c z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return z;
}

const Mat4c& pauli_kron(int i, int j) {
  static const std::array<Mat4c, 16> table = [] {
    std::array<Mat4c, 16> t;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(4 * a + b)] = kron22(pauli(a), pauli(b));
    return t;
  }();
  return table.at(static_cast<std::size_t>(4 * i + j));
}

double BlochForm::max_imag() const {
  double m = std::abs(t.imag());
  for (int i = 0; i < 3; ++i) {
    m = std::max(m, std::abs(r(i).imag()));
    m = std::max(m, std::abs(s(i).imag()));
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(T(i, j).imag()));
  }
  return m;
}

BlochForm BlochForm::real_part() const {
  BlochForm b;
  b.t = t.real();
  b.r = r.real().cast<cplx>();
  b.s = s.real().cast<cplx>();
  b.T = T.real().cast<cplx>();
  return b;
}

BlochForm decompose(const Mat4c& x) {
  // Coefficient extraction: c_ij = tr[X (sigma_i (x) sigma_j)] / 4.
  BlochForm b;
  b.t = (x * pauli_kron(0, 0)).trace() / 4.0;
  for (int i = 1; i <= 3; ++i) {
    b.r(i - 1) = (x * pauli_kron(i, 0)).trace() / 4.0;
    b.s(i - 1) = (x * pauli_kron(0, i)).trace() / 4.0;
    for (int j = 1; j <= 3; ++j) b.T(i - 1, j - 1) = (x * pauli_kron(i, j)).trace() / 4.0;
  }
  return b;
}

Mat4c reconstruct(const BlochForm& b) {
  Mat4c x = b.t * Mat4c::Identity();
  for (int i = 1; i <= 3; ++i) {
    x += b.r(i - 1) * pauli_kron(i, 0);
    x += b.s(i - 1) * pauli_kron(0, i);
    for (int j = 1; j <= 3; ++j) x += b.T(i - 1, j - 1) * pauli_kron(i, j);
  }
  return x;
}

Vec3c column_cross_sum(const Mat3c& a, const Mat3c& b) {
  Vec3c v = Vec3c::Zero();
  for (int i = 0; i < 3; ++i) v += cross3<cplx>(a.col(i), b.col(i));
  return v;
}

cplx bloch_trace_product(const BlochForm& x, const BlochForm& y) {
  return 4.0 * (x.t * y.t + dot3<cplx>(x.r, y.r) + dot3<cplx>(x.s, y.s) + frob3<cplx>(x.T, y.T));
}

BlochForm bloch_product(const BlochForm& x, const BlochForm& y) {
  BlochForm p;
  p.t = x.t * y.t + dot3<cplx>(x.r, y.r) + dot3<cplx>(x.s, y.s) + frob3<cplx>(x.T, y.T);
  p.r = y.t * x.r + x.t * y.r + y.T * x.s + x.T * y.s +
        kI * (cross3<cplx>(x.r, y.r) + column_cross_sum(x.T, y.T));
  p.s = y.t * x.s + x.t * y.s + y.T.transpose() * x.r + x.T.transpose() * y.r +
        kI * (cross3<cplx>(x.s, y.s) + column_cross_sum(x.T.transpose(), y.T.transpose()));
  p.T = y.t * x.T + x.t * y.T + x.r * y.s.transpose() + y.r * x.s.transpose() -
        omega<cplx>(x.T, y.T) + kI * (psi<cplx>(x.r, y.T, x.s) - psi<cplx>(y.r, x.T, y.s));
  return p;
}

BlochForm commutator_bloch(const BlochForm& x, const BlochForm& y) {
  if (!x.is_real() || !y.is_real())
    throw std::invalid_argument("commutator_bloch: operands must be Hermitian (real tuples)");
  BlochForm c;
  c.t = 0.0;
  c.r = 2.0 * kI * (cross3<cplx>(x.r, y.r) + column_cross_sum(x.T, y.T));
  c.s = 2.0 * kI * (cross3<cplx>(x.s, y.s) + column_cross_sum(x.T.transpose(), y.T.transpose()));
  c.T = 2.0 * kI * (psi<cplx>(x.r, y.T, x.s) - psi<cplx>(y.r, x.T, y.s));
  return c;
}

BlochForm bloch_power(const BlochForm& b, int k) {
  if (k < 0) throw std::invalid_argument("bloch_power: exponent must be non-negative");
  if (!b.is_real())
    throw std::invalid_argument("bloch_power: base must be Hermitian (real tuple)");
  BlochForm acc = BlochForm::identity();
  for (int i = 0; i < k; ++i) acc = bloch_product(acc, b);
  return acc;
}

}  // namespace luinv
