// Two-qubit state constructors, samplers and channel-free manipulations.
#pragma once

#include "luinv/bloch.hpp"
#include "luinv/linalg3.hpp"

#include <random>

namespace luinv {

// Real Bloch data (a, b, C) of rho = (I + a.sigma (x) I + I (x) b.sigma +
// sum_ij C_ij sigma_i (x) sigma_j) / 4. Hermitian and trace one by
// construction; PSD only when the positivity conditions hold.
struct StateParams {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 C = Mat3::Zero();
};

struct LocalUnitary {
  Mat2c UA = Mat2c::Identity();
  Mat2c UB = Mat2c::Identity();
};

enum class Subsystem { A, B };

Mat4c state_from_params(const StateParams& p);
StateParams params_from_state(const Mat4c& rho);  // throws on non-Hermitian input

Mat4c werner(double w);                                    // w in [0,1]
Mat4c bell_diagonal(double t1, double t2, double t3);      // (t1,t2,t3) in D
bool in_bell_diagonal_region(double t1, double t2, double t3, double tol = 0.0);

Mat2c partial_trace(const Mat4c& rho, Subsystem keep);
Mat4c partial_transpose(const Mat4c& rho);  // transpose on subsystem A

double min_eigenvalue(const Mat4c& hermitian);
bool is_valid_state(const Mat4c& rho, double herm_tol = 1e-10, double psd_tol = 1e-9);

// Ginibre sampling: G G^dag / tr(G G^dag) with i.i.d. standard complex
// Gaussian entries.
Mat4c random_density(std::mt19937_64& rng);

// Haar sampling of U(2): QR of a standard complex Gaussian with the
// phase-fixed diagonal correction.
Mat2c random_unitary2(std::mt19937_64& rng);
LocalUnitary random_local_unitary(std::mt19937_64& rng);

Mat4c apply_lu(const Mat4c& rho, const LocalUnitary& g);

}  // namespace luinv
