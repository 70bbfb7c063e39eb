#include "easyq/index_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace easyq {

IndexSpace::IndexSpace(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || (p == 0 && q == 0))
    throw std::invalid_argument("index space needs p,q >= 0 with p^2+q^2 > 0");
}

IntMatrix f_matrix(int p, int q) {
  const IndexSpace space(p, q);
  const int n = space.n();
  IntMatrix f(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int z = 0; z < n; ++z) f[static_cast<size_t>(z)][static_cast<size_t>(space.bar(z))] = 1;
  return f;
}

ComplexMatrix c_matrix(int p, int q) {
  const IndexSpace space(p, q);
  const int n = space.n();
  ComplexMatrix c(static_cast<size_t>(n),
                  std::vector<std::complex<double>>(static_cast<size_t>(n), 0.0));
  const double invSqrt2 = 1.0 / std::sqrt(2.0);
  auto rho = [](int k) {
    const double angle = 2.0 * std::numbers::pi * k / 8.0;
    return std::complex<double>(std::cos(angle), std::sin(angle));
  };
  for (int a = 0; a < p; ++a) {
    const size_t z = static_cast<size_t>(2 * a);
    c[z][z] = invSqrt2 * rho(1);
    c[z][z + 1] = invSqrt2 * rho(7);
    c[z + 1][z] = invSqrt2 * rho(3);
    c[z + 1][z + 1] = invSqrt2 * rho(5);
  }
  for (int m = 0; m < q; ++m) c[static_cast<size_t>(2 * p + m)][static_cast<size_t>(2 * p + m)] = 1.0;
  return c;
}

}  // namespace easyq
