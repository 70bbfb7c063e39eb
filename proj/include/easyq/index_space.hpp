#pragma once

#include <complex>
#include <vector>

namespace easyq {

/// Index set J_{p,q}: pairs (i,alpha) with i in {0,1}, alpha in 1..p,
/// ordered (0,1),(1,1),...,(0,p),(1,p), followed by 1..q. Encoded as
/// 0..n-1 with n = 2p+q; the bar involution swaps the two members of a
/// pair and fixes the q-part.
struct IndexSpace {
  int p = 0;
  int q = 0;

  IndexSpace() = default;
  IndexSpace(int p_, int q_);

  int n() const { return 2 * p + q; }
  bool in_pair_part(int z) const { return z < 2 * p; }
  int bar(int z) const { return z < 2 * p ? (z ^ 1) : z; }
};

using IntMatrix = std::vector<std::vector<long long>>;
using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// F_{p,q}: the permutation matrix of the bar involution.
IntMatrix f_matrix(int p, int q);

/// C_{p,q}: 2x2 blocks (1/sqrt 2)[[rho, rho^7],[rho^3, rho^5]] with
/// rho = e^{2 pi i/8} on the pair part, identity on the q-part.
ComplexMatrix c_matrix(int p, int q);

}  // namespace easyq
