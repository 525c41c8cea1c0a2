#include "luinv/states.hpp"

#include <cmath>

namespace luinv {

Mat4c state_from_params(const StateParams& p) {
  BlochForm b;
  b.t = 0.25;
  b.r = p.a.cast<cplx>() * 0.25;
  b.s = p.b.cast<cplx>() * 0.25;
  b.T = p.C.cast<cplx>() * 0.25;
  return reconstruct(b);
}

StateParams params_from_state(const Mat4c& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("params_from_state: input is not Hermitian");
  const BlochForm b = decompose(rho);
  StateParams p;
  p.a = (4.0 * b.r).real();
  p.b = (4.0 * b.s).real();
  p.C = (4.0 * b.T).real();
  return p;
}

Mat4c werner(double w) {
  if (w < 0.0 || w > 1.0) throw std::out_of_range("werner: w must lie in [0,1]");
  StateParams p;
  p.C = -w * Mat3::Identity();
  return state_from_params(p);
}

bool in_bell_diagonal_region(double t1, double t2, double t3, double tol) {
  return 1.0 - t1 - t2 - t3 >= -tol && 1.0 - t1 + t2 + t3 >= -tol &&
         1.0 + t1 - t2 + t3 >= -tol && 1.0 + t1 + t2 - t3 >= -tol;
}

Mat4c bell_diagonal(double t1, double t2, double t3) {
  if (!in_bell_diagonal_region(t1, t2, t3, 1e-12))
    throw std::out_of_range("bell_diagonal: (t1,t2,t3) outside the state tetrahedron");
  StateParams p;
  p.C = Vec3(t1, t2, t3).asDiagonal();
  return state_from_params(p);
}

Mat2c partial_trace(const Mat4c& rho, Subsystem keep) {
  Mat2c out = Mat2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        out(i, k) += (keep == Subsystem::A) ? rho(2 * i + j, 2 * k + j) : rho(2 * j + i, 2 * j + k);
  return out;
}

Mat4c partial_transpose(const Mat4c& rho) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = rho(2 * k + j, 2 * i + l);
  return out;
}

double min_eigenvalue(const Mat4c& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_valid_state(const Mat4c& rho, double herm_tol, double psd_tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > herm_tol) return false;
  if (std::abs(rho.trace() - cplx(1.0)) > herm_tol * 10) return false;
  return min_eigenvalue(rho) >= -psd_tol;
}

Mat4c random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  Mat4c rho = g * g.adjoint();
  rho /= rho.trace();
  // Symmetrize away the last ulps so downstream Hermiticity checks are exact.
  rho = 0.5 * (rho + rho.adjoint().eval());
  return rho;
}

Mat2c random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat2c g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat2c> qr(g);
  Mat2c q = qr.householderQ();
  const Mat2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

LocalUnitary random_local_unitary(std::mt19937_64& rng) {
  LocalUnitary g;
  g.UA = random_unitary2(rng);
  g.UB = random_unitary2(rng);
  return g;
}

Mat4c apply_lu(const Mat4c& rho, const LocalUnitary& g) {
  const Mat4c u = kron22(g.UA, g.UB);
  return u * rho * u.adjoint();
}

}  // namespace luinv
