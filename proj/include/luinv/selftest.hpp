// Randomized property suites for every module. The CLI selftest command, the
// unit tests and the acceptance harness all run these with their own sample
// counts and seeds.
#pragma once

#include "luinv/entanglement.hpp"
#include "luinv/luequiv.hpp"
#include "luinv/reference.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace luinv::selftest {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst absolute error (or count, see note)
  double tolerance = 0.0;
  std::string note;
};

using Results = std::vector<PropertyResult>;

// 3x3 identity suite: every adjugate/Omega/Psi/cross identity from the
// appendix toolbox, each on `samples` random unit-scale inputs.
Results linalg3_identities(std::uint64_t seed, int samples, double tol);

// Newton-identity values against the determinant formula and the frozen
// eigenvalue examples.
Results newton_identities(std::uint64_t seed, int samples, double tol);

// Bloch product against dense 4x4 multiplication on random Hermitian pairs.
Results bloch_product_fidelity(std::uint64_t seed, int samples, double tol);

// Closed forms for X^2, X^3, X^4 against the power recurrence and dense
// matrix powers.
Results bloch_power_closed_forms(std::uint64_t seed, int samples, double tol);

// rho^k and rho^k(marginal) coefficient blocks against dense products.
Results bloch_state_products(std::uint64_t seed, int samples, double tol);

// decompose/reconstruct round trip, Hermiticity of coefficients, commutator.
Results bloch_basics(std::uint64_t seed, int samples, double tol);

// Positivity: five-inequality criterion and power-trace criterion against
// the eigenvalue oracle, outside the stated margin band.
Results positivity_agreement(std::uint64_t seed, int samples, double band);

// Bell-diagonal tetrahedron membership equals PSD on a grid over [-1,1]^3.
Results bell_diagonal_grid(int points_per_axis, double band);

// Local-unitary invariance of all 18 Bargmann invariants.
Results bargmann_lu_invariance(std::uint64_t seed, int pairs, double tol);

// bargmann_from_L o makhlin_L against bargmann_direct (per index), and the
// L -> B -> L round trip (per index).
Results conversion_consistency(std::uint64_t seed, int samples, double tol_forward,
                               double tol_roundtrip);

// Word reversal conjugates the trace; spot words against multivariate_trace.
Results bargmann_word_properties(std::uint64_t seed, int samples, double tol);

// B4 = B6 = B10 = 1 for pure states.
Results purity_chain(std::uint64_t seed, int samples, double tol);

// I <-> L relations, including the recorded I14 = 2 L14 factor.
Results makhlin_relations(std::uint64_t seed, int samples, double tol);

// Quartic roots against the eigenvalues of 4 rho - 1 and of the partial
// transpose; det(rho^Gamma) two ways.
Results char_coeffs_suite(std::uint64_t seed, int samples, double tol_roots, double tol_det);

// Permutation engine: representation property, cycle traces, LU invariance,
// layout conjugation against a direct digit-map construction.
Results permutation_suite(std::uint64_t seed, int samples, double tol_cycles,
                          double tol_lu);

// LU-orbit pairs declared equivalent; spectra-distinct pairs inequivalent.
Results lu_discrimination(std::uint64_t seed, int pairs, double tol);

// PPT vs Makhlin vs Bargmann verdicts on random states; margins two ways.
Results detector_agreement(std::uint64_t seed, int samples, double band);

// Bisection of the Bargmann criterion on the Werner family.
Results werner_bisection(double tol);

// Detector verdicts against |t1|+|t2|+|t3| > 1 on the tetrahedron grid.
Results bell_diagonal_sweep(int points_per_axis, double band);

struct Summary {
  int total = 0;
  int failed = 0;
};

// profile: "quick" (reduced counts) or "full" (full-scale counts).
// tol_scale multiplies every tolerance; 0 turns the run into a harness canary
// that must fail.
Results run_selftest(const std::string& profile, std::uint64_t seed, double tol_scale = 1.0);

Summary summarize(const Results& rs);

}  // namespace luinv::selftest
