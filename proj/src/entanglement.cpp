#include "luinv/entanglement.hpp"

#include <cmath>

namespace luinv {

EntanglementVerdict is_entangled_ppt(const Mat4c& rho) {
  if (!is_valid_state(rho, 1e-8, 1e-7))
    throw std::invalid_argument("is_entangled_ppt: input is not a valid state");
  EntanglementVerdict v;
  v.method = EntMethod::ppt;
  v.margin = partial_transpose(rho).determinant().real();
  v.boundary = std::abs(v.margin) <= kBoundaryBand;
  v.entangled = !v.boundary && v.margin < 0.0;
  return v;
}

EntanglementVerdict is_entangled_makhlin(const StateParams& p) {
  const Vec3 &a = p.a, &b = p.b;
  const Mat3& C = p.C;
  const double na = a.squaredNorm(), nb = b.squaredNorm(), nc = frob3<double>(C, C);
  const Mat3 CtC = C.transpose() * C;
  const double lhs = 1.0 + (na - nb) * (na - nb) + 2.0 * (na + nb) * nc +
                     2.0 * frob3<double>(CtC, CtC) + 8.0 * (a.dot(C * b) + C.determinant());
  const double rhs = nc * nc + 2.0 * (na + nb + nc) +
                     4.0 * (a.dot(C * C.transpose() * a) + b.dot(CtC * b)) +
                     8.0 * a.dot(cofactor_matrix<double>(C) * b);
  EntanglementVerdict v;
  v.method = EntMethod::makhlin;
  v.margin = rhs - lhs;
  v.boundary = std::abs(v.margin) <= kBoundaryBand;
  v.entangled = !v.boundary && v.margin > 0.0;
  return v;
}

double bargmann_criterion_lhs(const BargmannVector& B) {
  const cplx lhs = 6.0 * (B[0] + B[1] - B[0] * B[1] - B[3] - B[9]) + 12.0 * (B[4] - B[2]) +
                   3.0 * B[3] * B[3] + 4.0 * B[5];
  return lhs.real();
}

EntanglementVerdict is_entangled_bargmann(const BargmannVector& B) {
  EntanglementVerdict v;
  v.method = EntMethod::bargmann;
  v.margin = 1.0 - bargmann_criterion_lhs(B);
  v.boundary = std::abs(v.margin) <= kBoundaryBand;
  v.entangled = !v.boundary && v.margin > 0.0;
  return v;
}

PositivityReport positivity_check(const StateParams& p, double tol) {
  const MakhlinVector L = makhlin_L(p);
  const double L1 = L[0], L2 = L[1], L3 = L[2], L4 = L[3], L5 = L[4], L7 = L[6], L8 = L[7],
               L12 = L[11], L14 = L[13];
  const double s = L2 + L4 + L7;
  PositivityReport rep;
  if (!(L4 >= -tol && L4 <= 1.0 + tol)) rep.violated.push_back("0<=L4<=1");
  if (!(L7 >= -tol && L7 <= 1.0 + tol)) rep.violated.push_back("0<=L7<=1");
  if (!(s >= -tol && s <= 3.0 + tol)) rep.violated.push_back("0<=L2+L4+L7<=3");
  if (!(s <= 1.0 + 2.0 * (L12 - L1) + tol)) rep.violated.push_back("L2+L4+L7<=1+2(L12-L1)");
  const double quartic =
      (s - 1.0) * (s - 1.0) - 4.0 * (L3 + L4 * L7 + L5 + L8) + 8.0 * (L12 + L14 - L1);
  if (!(quartic >= -tol)) rep.violated.push_back("quartic>=0");
  rep.psd = rep.violated.empty();
  return rep;
}

PositivityReport positivity_check_power_traces(const Mat4c& rho, double tol) {
  Mat4c acc = rho;
  std::vector<double> p;
  for (int k = 1; k <= 4; ++k) {
    p.push_back(acc.trace().real());
    acc = acc * rho;
  }
  const std::vector<double> e = elementary_from_power_sums(p);
  PositivityReport rep;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (!(e[k] >= -tol)) rep.violated.push_back("e" + std::to_string(k + 1) + ">=0");
  rep.psd = rep.violated.empty();
  return rep;
}

double werner_threshold() { return 1.0 / 3.0; }

bool bell_diagonal_entangled(double t1, double t2, double t3) {
  if (!in_bell_diagonal_region(t1, t2, t3, 1e-12))
    throw std::out_of_range("bell_diagonal_entangled: (t1,t2,t3) outside the state tetrahedron");
  return std::abs(t1) + std::abs(t2) + std::abs(t3) > 1.0;
}

const char* to_string(EntMethod m) {
  switch (m) {
    case EntMethod::ppt: return "ppt";
    case EntMethod::makhlin: return "makhlin";
    case EntMethod::bargmann: return "bargmann";
  }
  return "?";
}

}  // namespace luinv
