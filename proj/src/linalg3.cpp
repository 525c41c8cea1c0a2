#include "luinv/linalg3.hpp"

namespace luinv {

const Mat3& cross_generator(int k) {
  static const Mat3 f1 = (Mat3() << 0, 0, 0, 0, 0, 1, 0, -1, 0).finished();
  static const Mat3 f2 = (Mat3() << 0, 0, -1, 0, 0, 0, 1, 0, 0).finished();
  static const Mat3 f3 = (Mat3() << 0, 1, 0, -1, 0, 0, 0, 0, 0).finished();
  switch (k) {
    case 0: return f1;
    case 1: return f2;
    case 2: return f3;
    default: throw std::out_of_range("cross_generator: index must be 0, 1 or 2");
  }
}

std::vector<double> elementary_from_power_sums(const std::vector<double>& p) {
  if (p.empty()) throw std::invalid_argument("elementary_from_power_sums: need k >= 1");
  std::vector<double> e(p.size());
  for (std::size_t k = 1; k <= p.size(); ++k) {
    double acc = 0.0;
    double sign = 1.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const double ekj = (k == j) ? 1.0 : e[k - j - 1];
      acc += sign * ekj * p[j - 1];
      sign = -sign;
    }
    e[k - 1] = acc / static_cast<double>(k);
  }
  return e;
}

}  // namespace luinv
