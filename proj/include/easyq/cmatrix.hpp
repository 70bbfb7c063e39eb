#pragma once

#include <complex>
#include <vector>

namespace easyq {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
struct CMat {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0.0) {}

  cplx& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  const cplx& at(int r, int c) const {
    return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }

  static CMat identity(int n);
};

CMat mul(const CMat& x, const CMat& y);
CMat add(const CMat& x, const CMat& y);
CMat sub(const CMat& x, const CMat& y);
CMat scale(const CMat& x, cplx s);
CMat adjoint(const CMat& x);
CMat conj_entrywise(const CMat& x);
double fro_norm(const CMat& x);

/// ||x - y||_F / max(1, ||x||_F, ||y||_F).
double rel_residual(const CMat& x, const CMat& y);

/// n x n matrix with d x d operator entries; d = 1 models classical
/// group elements.
struct BlockMatrixModel {
  int n = 0;
  int d = 1;
  std::vector<CMat> entries;  // n*n, row-major

  BlockMatrixModel() = default;
  BlockMatrixModel(int n_, int d_);

  CMat& entry(int z, int y) { return entries[static_cast<size_t>(z) * static_cast<size_t>(n) + static_cast<size_t>(y)]; }
  const CMat& entry(int z, int y) const {
    return entries[static_cast<size_t>(z) * static_cast<size_t>(n) + static_cast<size_t>(y)];
  }

  /// The model as one nd x nd matrix.
  CMat flat() const;
};

/// k-th tensor power as a flat (n^k d) square matrix; the ((z...),(y...))
/// entry is the left-to-right product U_{z1,y1} ... U_{zk,yk}. k = 0 gives
/// the d x d identity.
CMat tensor_power_flat(const BlockMatrixModel& u, int k);

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations;
/// returns eigenvalues ascending and fills the column eigenvector matrix.
std::vector<double> hermitian_eig(const CMat& h, CMat& vectors);

}  // namespace easyq
