// Three independent entanglement detectors for two-qubit states plus
// positivity certification. All three decide the same set (PPT is necessary
// and sufficient for two qubits); the suites cross-check their agreement.
#pragma once

#include "luinv/invariants.hpp"

#include <string>
#include <vector>

namespace luinv {

enum class EntMethod { ppt, makhlin, bargmann };

struct EntanglementVerdict {
  bool entangled = false;
  // Signed distance of the active inequality from its threshold:
  //   ppt:      det(rho^Gamma)          (entangled iff < 0)
  //   makhlin:  RHS - LHS of the L-form (entangled iff > 0)
  //   bargmann: 1 - LHS of the B-form   (entangled iff > 0)
  double margin = 0.0;
  EntMethod method = EntMethod::ppt;
  bool boundary = false;  // |margin| within the boundary band
};

inline constexpr double kBoundaryBand = 1e-9;

EntanglementVerdict is_entangled_ppt(const Mat4c& rho);
EntanglementVerdict is_entangled_makhlin(const StateParams& p);
EntanglementVerdict is_entangled_bargmann(const BargmannVector& B);

// Left-hand side of the Bargmann test; entangled iff it is < 1.
double bargmann_criterion_lhs(const BargmannVector& B);

struct PositivityReport {
  bool psd = false;
  std::vector<std::string> violated;  // names of failed inequalities
};

// The five polynomial inequalities in the L-invariants that are necessary
// and sufficient for rho >= 0; valid for arbitrary Hermitian trace-one input.
PositivityReport positivity_check(const StateParams& p, double tol = 1e-9);

// Same decision from power traces tr(rho^k), k = 1..4, via Newton's
// identities: PSD iff all elementary symmetric functions are non-negative.
PositivityReport positivity_check_power_traces(const Mat4c& rho, double tol = 1e-9);

double werner_threshold();  // 1/3
bool bell_diagonal_entangled(double t1, double t2, double t3);  // throws outside D

const char* to_string(EntMethod m);

}  // namespace luinv
