#include "easyq/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "easyq/errors.hpp"

namespace easyq {

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat mul(const CMat& x, const CMat& y) {
  if (x.cols != y.rows) throw ShapeMismatchError("matrix product shape mismatch");
  CMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const cplx v = x.at(i, k);
      if (v == cplx(0.0)) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

CMat add(const CMat& x, const CMat& y) {
  CMat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

CMat sub(const CMat& x, const CMat& y) {
  CMat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

CMat scale(const CMat& x, cplx s) {
  CMat out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

CMat adjoint(const CMat& x) {
  CMat out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = std::conj(x.at(i, j));
  return out;
}

CMat conj_entrywise(const CMat& x) {
  CMat out = x;
  for (auto& v : out.a) v = std::conj(v);
  return out;
}

double fro_norm(const CMat& x) {
  double s = 0.0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

double rel_residual(const CMat& x, const CMat& y) {
  const double diff = fro_norm(sub(x, y));
  return diff / std::max({1.0, fro_norm(x), fro_norm(y)});
}

BlockMatrixModel::BlockMatrixModel(int n_, int d_)
    : n(n_), d(d_), entries(static_cast<size_t>(n_) * static_cast<size_t>(n_), CMat(d_, d_)) {
  if (n_ <= 0 || d_ <= 0) throw std::invalid_argument("model needs n, d >= 1");
}

CMat BlockMatrixModel::flat() const {
  CMat out(n * d, n * d);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) {
      const CMat& e = entry(z, y);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out.at(z * d + r, y * d + c) = e.at(r, c);
    }
  return out;
}

CMat tensor_power_flat(const BlockMatrixModel& u, int k) {
  CMat acc = CMat::identity(u.d);  // power 0: one block
  int dim = 1;                     // current n^power
  for (int step = 0; step < k; ++step) {
    const int nd = dim * u.n;
    CMat next(nd * u.d, nd * u.d);
    for (int zv = 0; zv < dim; ++zv)
      for (int yv = 0; yv < dim; ++yv)
        for (int z = 0; z < u.n; ++z)
          for (int y = 0; y < u.n; ++y) {
            // block product: acc[zv,yv] * U[z,y]
            const CMat& e = u.entry(z, y);
            for (int r = 0; r < u.d; ++r)
              for (int c = 0; c < u.d; ++c) {
                cplx s = 0.0;
                for (int m = 0; m < u.d; ++m)
                  s += acc.at(zv * u.d + r, yv * u.d + m) * e.at(m, c);
                next.at((zv * u.n + z) * u.d + r, (yv * u.n + y) * u.d + c) = s;
              }
          }
    acc = std::move(next);
    dim = nd;
  }
  return acc;
}

std::vector<double> hermitian_eig(const CMat& h, CMat& vectors) {
  const int n = h.rows;
  CMat a = h;
  vectors = CMat::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
    if (off < 1e-26) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        // complex Jacobi rotation zeroing a[p][q]
        const double absApq = std::abs(apq);
        const cplx phase = apq / absApq;
        const double tau = (aqq - app) / (2.0 * absApq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;

        for (int i = 0; i < n; ++i) {
          const cplx aip = a.at(i, p);
          const cplx aiq = a.at(i, q);
          a.at(i, p) = c * aip - std::conj(sp) * aiq;
          a.at(i, q) = sp * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const cplx api = a.at(p, i);
          const cplx aqi = a.at(q, i);
          a.at(p, i) = c * api - sp * aqi;
          a.at(q, i) = std::conj(sp) * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const cplx vip = vectors.at(i, p);
          const cplx viq = vectors.at(i, q);
          vectors.at(i, p) = c * vip - std::conj(sp) * viq;
          vectors.at(i, q) = sp * vip + c * viq;
        }
      }
  }

  std::vector<double> vals(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = a.at(i, i).real();

  // sort ascending, permuting eigenvector columns alongside
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return vals[static_cast<size_t>(x)] < vals[static_cast<size_t>(y)]; });
  CMat sorted(n, n);
  std::vector<double> svals(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    svals[static_cast<size_t>(j)] = vals[static_cast<size_t>(order[static_cast<size_t>(j)])];
    for (int i = 0; i < n; ++i) sorted.at(i, j) = vectors.at(i, order[static_cast<size_t>(j)]);
  }
  vectors = std::move(sorted);
  return svals;
}

}  // namespace easyq
