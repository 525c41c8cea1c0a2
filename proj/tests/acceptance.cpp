// Acceptance suite: every criterion runs at its stated sample count and
// tolerance and prints one pass/fail line. Exits nonzero on any failure.

#include "luinv/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace luinv;
using selftest::Results;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

// All properties pass; returns the worst error across the group.
bool all_pass(const Results& rs, double* worst = nullptr) {
  bool ok = true;
  double w = 0.0;
  for (const auto& r : rs) {
    ok = ok && r.passed;
    w = std::max(w, r.worst);
    if (!r.passed)
      std::printf("       offending property: %s (worst %.3g, tol %.3g)\n", r.name.c_str(),
                  r.worst, r.tolerance);
  }
  if (worst) *worst = w;
  return ok;
}

char buf_[256];
const char* fmt(const char* f, double a, double b = 0.0) {
  std::snprintf(buf_, sizeof buf_, f, a, b);
  return buf_;
}

}  // namespace

int main() {
  // 1. Werner threshold by bisection of the Bargmann criterion: 1/3 +- 1e-9,
  //    under one second.
  {
    Timer t;
    const Results rs = selftest::werner_bisection(1e-9);
    const double dt = t.seconds();
    double worst = 0.0;
    const bool ok = all_pass(rs, &worst) && dt < 1.0;
    report(1, "Werner threshold bisection lands at 1/3 within 1e-9", ok,
           fmt("deviation %.3g, %.2fs", worst, dt));
  }

  // 2. Bell-diagonal region: all detectors agree with |t1|+|t2|+|t3| > 1 on a
  //    21^3 grid outside a 1e-8 band, under ten seconds.
  {
    Timer t;
    const Results rs = selftest::bell_diagonal_sweep(21, 1e-8);
    const double dt = t.seconds();
    const bool ok = all_pass(rs) && dt < 10.0;
    report(2, "Bell-diagonal detectors match the |t|_1 > 1 region on the 21^3 grid", ok,
           fmt("disagreements %.0f, %.2fs", rs.front().worst, dt));
  }

  // 3. Product-formula fidelity: 1000 random Hermitian pairs, max entrywise
  //    error below 1e-10 against dense products.
  {
    double worst = 0.0;
    const bool ok = all_pass(selftest::bloch_product_fidelity(101, 1000, 1e-10), &worst);
    report(3, "Bloch product matches dense 4x4 products on 1000 pairs", ok,
           fmt("max error %.3g", worst));
  }

  // 4. Power closed forms: X^2, X^3, X^4 closed forms vs recurrence vs dense
  //    powers on 200 random Hermitian inputs, error below 1e-9.
  {
    double worst = 0.0;
    const bool ok = all_pass(selftest::bloch_power_closed_forms(102, 200, 1e-9), &worst);
    report(4, "closed forms for X^2, X^3, X^4 agree with recurrence and dense powers", ok,
           fmt("max error %.3g", worst));
  }

  // 5. Conversion completeness: on 1000 random states,
  //    bargmann_from_L o makhlin_L = bargmann_direct to 1e-8 and
  //    L_from_B o bargmann_from_L = identity to 1e-7, for every index.
  {
    const Results rs = selftest::conversion_consistency(103, 1000, 1e-8, 1e-7);
    double worst = 0.0;
    bool ok = true;
    for (const auto& r : rs) {
      worst = std::max(worst, r.worst);
      if (!r.passed) {
        ok = false;
        std::printf("       published-formula discrepancy at %s (worst %.3g)\n", r.name.c_str(),
                    r.worst);
      }
    }
    report(5, "all 18 conversion polynomials certified against direct traces", ok,
           fmt("max error %.3g", worst));
  }

  // 6. LU invariance and discrimination: 500 orbit pairs equivalent, 500
  //    spectra-distinct pairs inequivalent, zero inconclusive.
  {
    Results rs = selftest::lu_discrimination(104, 500, 1e-8);
    const Results inv = selftest::bargmann_lu_invariance(105, 500, 1e-9);
    rs.insert(rs.end(), inv.begin(), inv.end());
    const bool ok = all_pass(rs);
    report(6, "500 LU-orbit pairs equivalent, 500 distinct-spectra pairs inequivalent", ok,
           fmt("invariance error %.3g", inv.front().worst));
  }

  // 7. Characteristic coefficients: quartic roots track the eigensolver on
  //    500 random states below 1e-8; Bell state gives (p,q,r) = (-6,-8,-3).
  {
    double worst = 0.0;
    bool ok = all_pass(selftest::char_coeffs_suite(106, 500, 1e-8, 1e-10), &worst);
    StateParams bell;
    bell.C = -Mat3::Identity();
    const CharCoeffs c = char_coeffs(bell);
    ok = ok && std::abs(c.p + 6) < 1e-12 && std::abs(c.q + 8) < 1e-12 &&
         std::abs(c.r + 3) < 1e-12;
    report(7, "quartic roots match eigenvalues; Bell gives (p,q,r) = (-6,-8,-3)", ok,
           fmt("max root deviation %.3g", worst));
  }

  // 8. Permutation traces: (swap,swap) = tr rho^2 and (3-cycle,3-cycle) =
  //    tr rho^3 to 1e-10 on 100 states; sampled traces LU invariant to 1e-9.
  {
    double worst = 0.0;
    const bool ok = all_pass(selftest::permutation_suite(107, 100, 1e-10, 1e-9), &worst);
    report(8, "permutation traces reproduce power traces and are LU invariant", ok,
           fmt("max error %.3g", worst));
  }

  // 9. Three-way detector agreement on 10^4 random states outside the 1e-9
  //    margin band, under sixty seconds.
  {
    Timer t;
    const Results rs = selftest::detector_agreement(108, 10000, 1e-9);
    const double dt = t.seconds();
    const bool ok = all_pass(rs) && dt < 60.0;
    report(9, "PPT, Makhlin and Bargmann verdicts agree on 10^4 states", ok,
           fmt("disagreements %.0f, %.2fs", rs.front().worst, dt));
  }

  // 10. Appendix identity suite: at least 20 distinct identities, each on 100
  //     random inputs to 1e-10.
  {
    const Results rs = selftest::linalg3_identities(109, 100, 1e-10);
    double worst = 0.0;
    const bool ok = all_pass(rs, &worst) && rs.size() >= 20;
    report(10, "appendix 3x3 identity suite holds on 100 random inputs each", ok,
           fmt("%.0f identities, max error %.3g", static_cast<double>(rs.size()), worst));
  }

  if (g_failures == 0)
    std::printf("acceptance: all 10 criteria passed\n");
  else
    std::printf("acceptance: %d criterion/criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
