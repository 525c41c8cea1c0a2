#include "luinv/luequiv.hpp"

#include <algorithm>
#include <numeric>

namespace luinv {

bool is_permutation(const Permutation& pi) {
  std::vector<bool> seen(pi.size(), false);
  for (int v : pi) {
    if (v < 0 || v >= static_cast<int>(pi.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation compose(const Permutation& pi, const Permutation& tau) {
  Permutation out(tau.size());
  for (std::size_t k = 0; k < tau.size(); ++k)
    out[k] = pi[static_cast<std::size_t>(tau[k])];
  return out;
}

namespace {

long ipow(long base, int exp) {
  long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

Permutation inverse(const Permutation& pi) {
  Permutation inv(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) inv[static_cast<std::size_t>(pi[k])] = static_cast<int>(k);
  return inv;
}

void check_tuple(const PermutationTuple& t) {
  if (t.n < 1) throw std::invalid_argument("permutation tuple: n must be >= 1");
  if (t.pis.size() != t.dims.size())
    throw std::invalid_argument("permutation tuple: mismatched list lengths");
  long total = 1;
  for (std::size_t i = 0; i < t.dims.size(); ++i) {
    if (t.dims[i] < 1) throw std::invalid_argument("permutation tuple: bad dimension");
    if (static_cast<int>(t.pis[i].size()) != t.n || !is_permutation(t.pis[i]))
      throw std::invalid_argument("permutation tuple: entry is not a permutation of 1..n");
    total *= ipow(t.dims[i], t.n);
    if (total > kPermutationDimGuard)
      throw std::length_error("permutation tuple: total dimension exceeds guard");
  }
}

}  // namespace

Eigen::MatrixXcd permutation_operator(int d, int n, const Permutation& pi) {
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi))
    throw std::invalid_argument("permutation_operator: not a permutation of 1..n");
  const long dim = ipow(d, n);
  if (dim > kPermutationDimGuard)
    throw std::length_error("permutation_operator: d^n exceeds guard");
  const Permutation inv = inverse(pi);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (long col = 0; col < dim; ++col) {
    long rest = col;
    for (int k = n - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = static_cast<int>(rest % d);
      rest /= d;
    }
    long row = 0;
    for (int k = 0; k < n; ++k) row = row * d + digits[static_cast<std::size_t>(inv[static_cast<std::size_t>(k)])];
    p(row, col) = 1.0;
  }
  return p;
}

Eigen::MatrixXcd local_permutation_operator(const PermutationTuple& t) {
  check_tuple(t);
  const int nsub = static_cast<int>(t.dims.size());
  const int n = t.n;

  Eigen::MatrixXcd sub = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < nsub; ++i) {
    const Eigen::MatrixXcd pi_op = permutation_operator(t.dims[i], n, t.pis[static_cast<std::size_t>(i)]);
    Eigen::MatrixXcd next(sub.rows() * pi_op.rows(), sub.cols() * pi_op.cols());
    for (long r = 0; r < sub.rows(); ++r)
      for (long c = 0; c < sub.cols(); ++c)
        next.block(r * pi_op.rows(), c * pi_op.cols(), pi_op.rows(), pi_op.cols()) =
            sub(r, c) * pi_op;
    sub = std::move(next);
  }

  // Factor layouts: subsystem-major lists (subsystem, copy) with copy minor;
  // copy-major lists (copy, subsystem) with subsystem minor. reshuffle maps a
  // copy-major basis index to the corresponding subsystem-major one.
  const long dim = sub.rows();
  std::vector<int> factor_dim_sub, factor_dim_copy;
  for (int i = 0; i < nsub; ++i)
    for (int c = 0; c < n; ++c) factor_dim_sub.push_back(t.dims[static_cast<std::size_t>(i)]);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < nsub; ++i) factor_dim_copy.push_back(t.dims[static_cast<std::size_t>(i)]);

  std::vector<long> reshuffle(static_cast<std::size_t>(dim));
  std::vector<int> digits(factor_dim_copy.size());
  for (long idx = 0; idx < dim; ++idx) {
    long rest = idx;
    for (int f = static_cast<int>(digits.size()) - 1; f >= 0; --f) {
      digits[static_cast<std::size_t>(f)] = static_cast<int>(rest % factor_dim_copy[static_cast<std::size_t>(f)]);
      rest /= factor_dim_copy[static_cast<std::size_t>(f)];
    }
    long out = 0;
    for (int i = 0; i < nsub; ++i)
      for (int c = 0; c < n; ++c)
        out = out * factor_dim_sub[static_cast<std::size_t>(i * n + c)] + digits[static_cast<std::size_t>(c * nsub + i)];
    reshuffle[static_cast<std::size_t>(idx)] = out;
  }

  Eigen::MatrixXcd out(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c)
      out(r, c) = sub(reshuffle[static_cast<std::size_t>(r)], reshuffle[static_cast<std::size_t>(c)]);
  return out;
}

cplx permutation_trace(const Eigen::MatrixXcd& rho, const PermutationTuple& t) {
  check_tuple(t);
  long local_dim = 1;
  for (int d : t.dims) local_dim *= d;
  if (rho.rows() != local_dim || rho.cols() != local_dim)
    throw std::invalid_argument("permutation_trace: state dimension does not match dims");

  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(1, 1);
  for (int c = 0; c < t.n; ++c) {
    Eigen::MatrixXcd next(power.rows() * local_dim, power.cols() * local_dim);
    for (long r = 0; r < power.rows(); ++r)
      for (long q = 0; q < power.cols(); ++q)
        next.block(r * local_dim, q * local_dim, local_dim, local_dim) = power(r, q) * rho;
    power = std::move(next);
  }
  // tr(A P) = sum_ij A_ij P_ji, contracted entrywise to stay O(dim^2).
  return power.cwiseProduct(local_permutation_operator(t).transpose()).sum();
}

EquivalenceReport lu_equivalent(const Mat4c& rho, const Mat4c& sigma, double tol) {
  const BargmannVector br = bargmann_direct(rho);
  const BargmannVector bs = bargmann_direct(sigma);
  EquivalenceReport rep;
  rep.max_discrepancy = 0.0;
  rep.worst_index = 1;
  for (int k = 0; k < 18; ++k) {
    const double d = std::abs(br[static_cast<std::size_t>(k)] - bs[static_cast<std::size_t>(k)]);
    if (d > rep.max_discrepancy) {
      rep.max_discrepancy = d;
      rep.worst_index = k + 1;
    }
  }
  if (rep.max_discrepancy <= tol)
    rep.verdict = Equivalence::equivalent;
  else if (rep.max_discrepancy <= 10.0 * tol)
    rep.verdict = Equivalence::inconclusive;
  else
    rep.verdict = Equivalence::inequivalent;
  return rep;
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::inequivalent: return "inequivalent";
    case Equivalence::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace luinv
