// LU-equivalence decision via the complete Bargmann set, plus the
// permutation-trace quantities tr[rho^(x)n P_(d,n)(pi_1..pi_N)] at desk scale.
#pragma once

#include "luinv/invariants.hpp"

#include <string>
#include <vector>

namespace luinv {

// Permutations are held in 0-based one-line notation: pi[k] is the image of
// slot k. The operator moves slot k's content to slot pi(k).
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& pi);
Permutation compose(const Permutation& pi, const Permutation& tau);  // pi o tau

inline constexpr long kPermutationDimGuard = 4096;

// P(pi) on (C^d)^(x)n: P |i_1 .. i_n> = |i_{pi^-1(1)} .. i_{pi^-1(n)}>.
Eigen::MatrixXcd permutation_operator(int d, int n, const Permutation& pi);

struct PermutationTuple {
  int n = 1;
  std::vector<Permutation> pis;  // one per subsystem
  std::vector<int> dims;         // local dimensions
};

// Tensor product of per-subsystem permutation operators, conjugated from the
// subsystem-major factor order (A_1..A_n, B_1..B_n, ...) into the copy-major
// order (A_1, B_1, A_2, B_2, ...) that rho^(x)n is built in.
Eigen::MatrixXcd local_permutation_operator(const PermutationTuple& t);

// tr[rho^(x)n P_(d,n)(pi)]; rho acts on the tensor product of t.dims.
cplx permutation_trace(const Eigen::MatrixXcd& rho, const PermutationTuple& t);

enum class Equivalence { equivalent, inequivalent, inconclusive };

struct EquivalenceReport {
  Equivalence verdict = Equivalence::inconclusive;
  double max_discrepancy = 0.0;
  int worst_index = 0;  // 1-based Bargmann index
};

// Two states are LU equivalent iff all 18 Bargmann invariants agree. The
// verdict hedges to inconclusive when the discrepancy lies in (tol, 10 tol].
EquivalenceReport lu_equivalent(const Mat4c& rho, const Mat4c& sigma, double tol = 1e-8);

const char* to_string(Equivalence e);

}  // namespace luinv
