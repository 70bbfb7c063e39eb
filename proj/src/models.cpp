#include "easyq/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "easyq/errors.hpp"
#include "easyq/rng.hpp"

namespace easyq {

namespace {

double entry_residual(const CMat& got, const CMat& want) { return rel_residual(got, want); }

CMat half(const CMat& x) { return scale(x, 0.5); }

struct ResidualLog {
  std::vector<std::pair<std::string, double>> relations;

  void add(const std::string& name, double r) {
    for (auto& [n, v] : relations)
      if (n == name) {
        v = std::max(v, r);
        return;
      }
    relations.emplace_back(name, r);
  }
};

void add_unitarity(ResidualLog& log, const CMat& flat, const std::string& name) {
  const CMat eye = CMat::identity(flat.rows);
  log.add(name, std::max(entry_residual(mul(flat, adjoint(flat)), eye),
                         entry_residual(mul(adjoint(flat), flat), eye)));
}

void add_bar_relations(ResidualLog& log, const BlockMatrixModel& u, const IndexSpace& space) {
  double worst = 0.0;
  for (int z = 0; z < u.n; ++z)
    for (int y = 0; y < u.n; ++y)
      worst = std::max(worst, entry_residual(adjoint(u.entry(space.bar(z), space.bar(y))),
                                             u.entry(z, y)));
  log.add("bar", worst);
}

void add_sums(ResidualLog& log, const BlockMatrixModel& u) {
  const CMat eye = CMat::identity(u.d);
  double worstRow = 0.0;
  double worstCol = 0.0;
  for (int z = 0; z < u.n; ++z) {
    CMat row(u.d, u.d);
    CMat col(u.d, u.d);
    for (int y = 0; y < u.n; ++y) {
      row = add(row, u.entry(z, y));
      col = add(col, u.entry(y, z));
    }
    worstRow = std::max(worstRow, entry_residual(row, eye));
    worstCol = std::max(worstCol, entry_residual(col, eye));
  }
  log.add("row-sum", worstRow);
  log.add("col-sum", worstCol);
}

void add_projections(ResidualLog& log, const BlockMatrixModel& u) {
  double worst = 0.0;
  for (const CMat& e : u.entries) {
    worst = std::max(worst, entry_residual(adjoint(e), e));
    worst = std::max(worst, entry_residual(mul(e, e), e));
  }
  log.add("projection", worst);
}

void add_partial_isometries(ResidualLog& log, const BlockMatrixModel& u) {
  double worst = 0.0;
  for (const CMat& e : u.entries)
    worst = std::max(worst, entry_residual(mul(mul(e, adjoint(e)), e), e));
  log.add("partial-isometry", worst);
}

void add_partial_symmetries(ResidualLog& log, const BlockMatrixModel& u) {
  double worstSelf = 0.0;
  double worstCube = 0.0;
  for (const CMat& e : u.entries) {
    worstSelf = std::max(worstSelf, entry_residual(adjoint(e), e));
    worstCube = std::max(worstCube, entry_residual(mul(mul(e, e), e), e));
  }
  log.add("selfadjoint", worstSelf);
  log.add("cube", worstCube);
}

void add_h4_relations(ResidualLog& log, const BlockMatrixModel& u) {
  double worstNormal = 0.0;
  double worstFourth = 0.0;
  double worstProj = 0.0;
  for (const CMat& e : u.entries) {
    const CMat ee = mul(e, adjoint(e));
    worstNormal = std::max(worstNormal, entry_residual(ee, mul(adjoint(e), e)));
    worstFourth = std::max(worstFourth, entry_residual(mul(mul(e, e), mul(e, e)), ee));
    worstProj = std::max(worstProj, entry_residual(mul(ee, ee), ee));
  }
  log.add("normal", worstNormal);
  log.add("fourth-power", worstFourth);
  log.add("range-projection", worstProj);
}

void add_cubic_orthogonality(ResidualLog& log, const BlockMatrixModel& u) {
  double worst = 0.0;
  const CMat zero(u.d, u.d);
  for (int z = 0; z < u.n; ++z)
    for (int y = 0; y < u.n; ++y)
      for (int x = 0; x < u.n; ++x) {
        if (x == y) continue;
        worst = std::max(worst, entry_residual(mul(u.entry(z, y), u.entry(z, x)), zero));
        worst = std::max(worst, entry_residual(mul(u.entry(y, z), u.entry(x, z)), zero));
      }
  log.add("row-col-orthogonality", worst);
}

void add_band_pattern(ResidualLog& log, const BlockMatrixModel& u, int bands,
                      const std::vector<std::vector<int>>& pattern, const std::string& name) {
  if (u.n % bands != 0) throw ShapeMismatchError("model size not divisible into bands");
  const int w = u.n / bands;
  double worst = 0.0;
  for (int br = 0; br < bands; ++br)
    for (int bc = 0; bc < bands; ++bc) {
      const int symbol = pattern[static_cast<size_t>(br)][static_cast<size_t>(bc)];
      // compare against the first band cell carrying the same symbol
      for (int br2 = 0; br2 <= br; ++br2)
        for (int bc2 = 0; bc2 < bands; ++bc2) {
          if (pattern[static_cast<size_t>(br2)][static_cast<size_t>(bc2)] != symbol) continue;
          if (br2 == br && bc2 == bc) goto nextCell;
          for (int r = 0; r < w; ++r)
            for (int c = 0; c < w; ++c)
              worst = std::max(worst, entry_residual(u.entry(br * w + r, bc * w + c),
                                                     u.entry(br2 * w + r, bc2 * w + c)));
          goto nextCell;
        }
    nextCell:;
    }
  log.add(name, worst);
}

}  // namespace

std::string preset_name(RelationPreset preset) {
  switch (preset) {
    case RelationPreset::Opq: return "opq";
    case RelationPreset::Bpq: return "bpq";
    case RelationPreset::Spq: return "spq";
    case RelationPreset::Hpq: return "hpq";
    case RelationPreset::Hspq: return "hspq";
    case RelationPreset::H4: return "h4";
    case RelationPreset::Magic: return "magic";
    case RelationPreset::Cubic: return "cubic";
    case RelationPreset::Sudoku: return "sudoku";
    case RelationPreset::DoubleSudoku: return "double-sudoku";
  }
  return "?";
}

RelationPreset parse_preset(const std::string& name) {
  for (RelationPreset p :
       {RelationPreset::Opq, RelationPreset::Bpq, RelationPreset::Spq, RelationPreset::Hpq,
        RelationPreset::Hspq, RelationPreset::H4, RelationPreset::Magic, RelationPreset::Cubic,
        RelationPreset::Sudoku, RelationPreset::DoubleSudoku})
    if (preset_name(p) == name) return p;
  throw ParseError("unknown preset: " + name);
}

CheckReport check(const BlockMatrixModel& u, RelationPreset preset, int p, int q, double tol) {
  ResidualLog log;
  const bool rawSize = preset == RelationPreset::Magic || preset == RelationPreset::Cubic ||
                       preset == RelationPreset::Sudoku || preset == RelationPreset::DoubleSudoku;
  if (!rawSize) {
    const IndexSpace space(p, q);
    if (u.n != space.n())
      throw ShapeMismatchError("model size " + std::to_string(u.n) + " != 2p+q = " +
                               std::to_string(space.n()));
    add_unitarity(log, u.flat(), "unitary");
    add_bar_relations(log, u, space);
    switch (preset) {
      case RelationPreset::Opq:
        break;
      case RelationPreset::Bpq:
        add_sums(log, u);
        break;
      case RelationPreset::Spq:
        add_projections(log, u);
        break;
      case RelationPreset::Hpq:
        add_partial_isometries(log, u);
        break;
      case RelationPreset::Hspq:
        add_partial_symmetries(log, u);
        break;
      case RelationPreset::H4: {
        CMat conjFlat = conj_entrywise(u.flat());
        add_unitarity(log, conjFlat, "conj-unitary");
        add_h4_relations(log, u);
        break;
      }
      default:
        break;
    }
  } else {
    add_unitarity(log, u.flat(), "unitary");
    switch (preset) {
      case RelationPreset::Magic:
        add_projections(log, u);
        add_sums(log, u);
        break;
      case RelationPreset::Cubic: {
        double worst = 0.0;
        for (const CMat& e : u.entries) worst = std::max(worst, entry_residual(adjoint(e), e));
        log.add("selfadjoint", worst);
        add_cubic_orthogonality(log, u);
        break;
      }
      case RelationPreset::Sudoku:
        add_projections(log, u);
        add_sums(log, u);
        add_band_pattern(log, u, 2, {{0, 1}, {1, 0}}, "sudoku-pattern");
        break;
      case RelationPreset::DoubleSudoku:
        add_projections(log, u);
        add_sums(log, u);
        add_band_pattern(log, u, 4,
                         {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                         "double-sudoku-pattern");
        break;
      default:
        break;
    }
  }

  CheckReport report;
  report.relations = log.relations;
  for (const auto& [name, r] : report.relations) report.maxResidual = std::max(report.maxResidual, r);
  report.pass = report.maxResidual <= tol;
  return report;
}

BlockMatrixModel conjugate_by_c(const BlockMatrixModel& u, int p, int q) {
  const IndexSpace space(p, q);
  if (u.n != space.n()) throw ShapeMismatchError("model size != 2p+q");
  const ComplexMatrix c = c_matrix(p, q);
  BlockMatrixModel out(u.n, u.d);
  for (int z = 0; z < u.n; ++z)
    for (int y = 0; y < u.n; ++y) {
      CMat acc(u.d, u.d);
      for (int z2 = 0; z2 < u.n; ++z2) {
        if (c[static_cast<size_t>(z)][static_cast<size_t>(z2)] == cplx(0.0)) continue;
        for (int y2 = 0; y2 < u.n; ++y2) {
          const cplx w = c[static_cast<size_t>(z)][static_cast<size_t>(z2)] *
                         std::conj(c[static_cast<size_t>(y)][static_cast<size_t>(y2)]);
          if (w == cplx(0.0)) continue;
          acc = add(acc, scale(u.entry(z2, y2), w));
        }
      }
      out.entry(z, y) = std::move(acc);
    }
  return out;
}

BlockMatrixModel sudoku_transform(const BlockMatrixModel& u, int p) {
  if (u.n != 2 * p) throw ShapeMismatchError("sudoku transform needs n == 2p");
  auto perm = [p](int r) { return r < p ? 2 * r : 2 * (r - p) + 1; };
  BlockMatrixModel out(u.n, u.d);
  for (int z = 0; z < u.n; ++z)
    for (int y = 0; y < u.n; ++y) out.entry(z, y) = u.entry(perm(z), perm(y));
  return out;
}

BlockMatrixModel double_sudoku(const BlockMatrixModel& u, int p) {
  const BlockMatrixModel s = sudoku_transform(u, p);
  auto positive = [](const CMat& x) { return half(add(mul(x, x), x)); };
  auto negative = [](const CMat& x) { return half(sub(mul(x, x), x)); };

  // band symbols: 0 = a+, 1 = b+, 2 = a-, 3 = b-
  const int pattern[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  BlockMatrixModel out(4 * p, u.d);
  for (int br = 0; br < 4; ++br)
    for (int bc = 0; bc < 4; ++bc) {
      const int symbol = pattern[br][bc];
      const bool fromB = symbol % 2 == 1;
      const bool neg = symbol >= 2;
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) {
          const CMat& src = s.entry(r, fromB ? p + c : c);
          out.entry(br * p + r, bc * p + c) = neg ? negative(src) : positive(src);
        }
    }
  return out;
}

BlockMatrixModel quotient_projections(const BlockMatrixModel& u, int p, int q, double tol) {
  const CheckReport pre = check(u, RelationPreset::Hpq, p, q, tol);
  if (!pre.pass)
    throw PrecondFailedError("quotient projections need a partial-isometry model; residual " +
                             std::to_string(pre.maxResidual));
  BlockMatrixModel out(u.n, u.d);
  for (int z = 0; z < u.n; ++z)
    for (int y = 0; y < u.n; ++y) out.entry(z, y) = mul(adjoint(u.entry(z, y)), u.entry(z, y));
  return out;
}

std::string group_name(SampleGroup g) {
  switch (g) {
    case SampleGroup::O: return "o";
    case SampleGroup::B: return "b";
    case SampleGroup::HxS: return "hxs";
    case SampleGroup::TorusH: return "torus-h";
    case SampleGroup::H4: return "h4";
    case SampleGroup::Hq: return "hq";
    case SampleGroup::Sq: return "sq";
  }
  return "?";
}

SampleGroup parse_group(const std::string& name) {
  for (SampleGroup g : {SampleGroup::O, SampleGroup::B, SampleGroup::HxS, SampleGroup::TorusH,
                        SampleGroup::H4, SampleGroup::Hq, SampleGroup::Sq})
    if (group_name(g) == name) return g;
  throw ParseError("unknown sample group: " + name);
}

namespace {

using RealMatrix = std::vector<std::vector<double>>;

RealMatrix haar_orthogonal(int n, SplitMix64& rng) {
  RealMatrix g(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (auto& row : g)
    for (double& v : row) v = rng.gaussian();

  // modified Gram-Schmidt on columns, then fix the diagonal signs of R
  RealMatrix qm(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int j = 0; j < n; ++j) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = g[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int prev = 0; prev < j; ++prev) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += qm[static_cast<size_t>(i)][static_cast<size_t>(prev)] * v[static_cast<size_t>(i)];
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= dot * qm[static_cast<size_t>(i)][static_cast<size_t>(prev)];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    double rjj = 0.0;
    for (int i = 0; i < n; ++i) rjj += v[static_cast<size_t>(i)] * g[static_cast<size_t>(i)][static_cast<size_t>(j)];
    const double sign = rjj < 0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) qm[static_cast<size_t>(i)][static_cast<size_t>(j)] = sign * v[static_cast<size_t>(i)] / norm;
  }
  return qm;
}

std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below(i + 1))]);
  return perm;
}

// U = C* V C for a real matrix V, as a d = 1 model.
BlockMatrixModel conjugate_real_into_bar_form(const RealMatrix& v, int p, int q) {
  const ComplexMatrix c = c_matrix(p, q);
  const int n = 2 * p + q;
  BlockMatrixModel out(n, 1);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) {
      cplx acc = 0.0;
      for (int z2 = 0; z2 < n; ++z2) {
        const cplx left = std::conj(c[static_cast<size_t>(z2)][static_cast<size_t>(z)]);  // C*[z][z2]
        if (left == cplx(0.0)) continue;
        for (int y2 = 0; y2 < n; ++y2)
          acc += left * v[static_cast<size_t>(z2)][static_cast<size_t>(y2)] *
                 c[static_cast<size_t>(y2)][static_cast<size_t>(y)];
      }
      out.entry(z, y).at(0, 0) = acc;
    }
  return out;
}

void put_pair_block(BlockMatrixModel& u, int rowPair, int colPair, cplx topLeft, cplx topRight,
                    cplx bottomLeft, cplx bottomRight) {
  u.entry(2 * rowPair, 2 * colPair).at(0, 0) = topLeft;
  u.entry(2 * rowPair, 2 * colPair + 1).at(0, 0) = topRight;
  u.entry(2 * rowPair + 1, 2 * colPair).at(0, 0) = bottomLeft;
  u.entry(2 * rowPair + 1, 2 * colPair + 1).at(0, 0) = bottomRight;
}

void put_signed_permutation(BlockMatrixModel& u, int offset, int q, SplitMix64& rng,
                            bool withSigns) {
  const auto perm = random_permutation(q, rng);
  for (int m = 0; m < q; ++m) {
    const double sign = withSigns && rng.below(2) ? -1.0 : 1.0;
    u.entry(offset + m, offset + perm[static_cast<size_t>(m)]).at(0, 0) = sign;
  }
}

BlockMatrixModel sample_b(int p, int q, SplitMix64& rng) {
  const int n = 2 * p + q;
  const ComplexMatrix c = c_matrix(p, q);

  // real constraint vectors: the (independent) real and imaginary parts
  // of C eta
  std::vector<cplx> w(static_cast<size_t>(n), 0.0);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) w[static_cast<size_t>(z)] += c[static_cast<size_t>(z)][static_cast<size_t>(y)];
  std::vector<std::vector<double>> fixed;
  for (int part = 0; part < 2; ++part) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<size_t>(i)] = part == 0 ? w[static_cast<size_t>(i)].real() : w[static_cast<size_t>(i)].imag();
    for (const auto& prev : fixed) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += prev[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= dot * prev[static_cast<size_t>(i)];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 1e-20) {
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
      fixed.push_back(std::move(v));
    }
  }
  const int m = static_cast<int>(fixed.size());

  // complete to an orthonormal basis
  RealMatrix basis = fixed;
  for (int e = 0; e < n && static_cast<int>(basis.size()) < n; ++e) {
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    v[static_cast<size_t>(e)] = 1.0;
    for (const auto& prev : basis) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += prev[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= dot * prev[static_cast<size_t>(i)];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 1e-12) {
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }

  const RealMatrix rest = haar_orthogonal(n - m, rng);
  // V = Q diag(I_m, rest) Q^t with Q columns = basis vectors
  RealMatrix v(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const double mid = (a < m || b < m) ? (a == b ? 1.0 : 0.0)
                                              : rest[static_cast<size_t>(a - m)][static_cast<size_t>(b - m)];
          if (mid == 0.0) continue;
          acc += basis[static_cast<size_t>(a)][static_cast<size_t>(i)] * mid *
                 basis[static_cast<size_t>(b)][static_cast<size_t>(j)];
        }
      v[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
    }
  return conjugate_real_into_bar_form(v, p, q);
}

}  // namespace

BlockMatrixModel sample_classical(SampleGroup g, int p, int q, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5eedba5eULL);
  rng.next();
  switch (g) {
    case SampleGroup::O:
      return conjugate_real_into_bar_form(haar_orthogonal(2 * p + q, rng), p, q);
    case SampleGroup::B:
      return sample_b(p, q, rng);
    case SampleGroup::HxS: {
      BlockMatrixModel u(2 * p + q, 1);
      const auto perm = random_permutation(p, rng);
      for (int a = 0; a < p; ++a) {
        if (rng.below(2))
          put_pair_block(u, a, perm[static_cast<size_t>(a)], 0, 1, 1, 0);
        else
          put_pair_block(u, a, perm[static_cast<size_t>(a)], 1, 0, 0, 1);
      }
      put_signed_permutation(u, 2 * p, q, rng, /*withSigns=*/false);
      return u;
    }
    case SampleGroup::TorusH: {
      BlockMatrixModel u(2 * p + q, 1);
      const auto perm = random_permutation(p, rng);
      for (int a = 0; a < p; ++a) {
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        const cplx z(std::cos(theta), std::sin(theta));
        if (rng.below(2))
          put_pair_block(u, a, perm[static_cast<size_t>(a)], 0, z, std::conj(z), 0);
        else
          put_pair_block(u, a, perm[static_cast<size_t>(a)], z, 0, 0, std::conj(z));
      }
      put_signed_permutation(u, 2 * p, q, rng, /*withSigns=*/true);
      return u;
    }
    case SampleGroup::H4: {
      BlockMatrixModel u(2 * p + q, 1);
      const auto perm = random_permutation(p, rng);
      for (int a = 0; a < p; ++a) {
        // a fourth root of unity a+ib as the block [[a,b],[b,a]]
        const int root = rng.below(4);
        const double re = root == 0 ? 1.0 : root == 2 ? -1.0 : 0.0;
        const double im = root == 1 ? 1.0 : root == 3 ? -1.0 : 0.0;
        put_pair_block(u, a, perm[static_cast<size_t>(a)], re, im, im, re);
      }
      put_signed_permutation(u, 2 * p, q, rng, /*withSigns=*/true);
      return u;
    }
    case SampleGroup::Hq: {
      BlockMatrixModel u(q, 1);
      put_signed_permutation(u, 0, q, rng, /*withSigns=*/true);
      return u;
    }
    case SampleGroup::Sq: {
      BlockMatrixModel u(q, 1);
      put_signed_permutation(u, 0, q, rng, /*withSigns=*/false);
      return u;
    }
  }
  throw std::invalid_argument("unknown sample group");
}

namespace {

// Hermitian inverse square root with small-eigenvalue clamping.
CMat inv_sqrt(const CMat& h) {
  CMat vecs;
  const auto vals = hermitian_eig(h, vecs);
  CMat mid(h.rows, h.rows);
  for (int i = 0; i < h.rows; ++i) {
    const double lambda = std::max(vals[static_cast<size_t>(i)], 1e-12);
    mid.at(i, i) = 1.0 / std::sqrt(lambda);
  }
  return mul(mul(vecs, mid), adjoint(vecs));
}

CMat polar_unitary(const CMat& x) { return mul(x, inv_sqrt(mul(adjoint(x), x))); }

// entrywise projection onto partial isometries: snap singular values
CMat snap_partial_isometry(const CMat& x) {
  CMat vecs;
  const auto vals = hermitian_eig(mul(adjoint(x), x), vecs);
  CMat mid(x.cols, x.cols);
  for (int i = 0; i < x.cols; ++i) {
    const double sigma = std::sqrt(std::max(vals[static_cast<size_t>(i)], 0.0));
    mid.at(i, i) = sigma > 0.5 ? 1.0 / sigma : 0.0;
  }
  return mul(x, mul(mul(vecs, mid), adjoint(vecs)));
}

double corner_mass(const BlockMatrixModel& u, int p, int q) {
  double best = 0.0;
  for (int z = 0; z < 2 * p; ++z)
    for (int m = 0; m < q; ++m) {
      best = std::max(best, fro_norm(u.entry(z, 2 * p + m)));
      best = std::max(best, fro_norm(u.entry(2 * p + m, z)));
    }
  return best;
}

}  // namespace

std::optional<BlockMatrixModel> witness_search(int d, long long budget, std::uint64_t seed, int p,
                                               int q) {
  if (d > 6) throw SizeLimitError("witness search limited to d <= 6");
  const IndexSpace space(p, q);
  const int n = space.n();
  SplitMix64 rng(seed ^ 0x11777e55ULL);

  long long used = 0;
  while (used < budget) {
    BlockMatrixModel x(n, d);
    for (auto& e : x.entries)
      for (auto& v : e.a) v = cplx(rng.gaussian(), rng.gaussian());

    for (int iter = 0; iter < 300 && used < budget; ++iter, ++used) {
      // bar symmetrization
      for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y) {
          const int zb = space.bar(z);
          const int yb = space.bar(y);
          if (std::make_pair(z, y) > std::make_pair(zb, yb)) continue;
          const CMat avg = half(add(x.entry(z, y), adjoint(x.entry(zb, yb))));
          x.entry(z, y) = avg;
          x.entry(zb, yb) = adjoint(avg);
        }
      // global unitarization
      {
        const CMat u = polar_unitary(x.flat());
        for (int z = 0; z < n; ++z)
          for (int y = 0; y < n; ++y)
            for (int r = 0; r < d; ++r)
              for (int c = 0; c < d; ++c) x.entry(z, y).at(r, c) = u.at(z * d + r, y * d + c);
      }
      // entrywise partial isometries
      for (auto& e : x.entries) e = snap_partial_isometry(e);

      if (iter % 10 == 9) {
        const CheckReport report = check(x, RelationPreset::Hpq, p, q, 1e-6);
        if (report.pass && corner_mass(x, p, q) > 0.1) return x;
      }
    }
  }
  return std::nullopt;
}

bool scalar_partial_symmetry_relation(cplx z, int k, double tol) {
  cplx rhs = std::conj(z);
  const double n2 = std::norm(z);
  for (int i = 0; i < k; ++i) rhs *= n2;
  return std::abs(z - rhs) <= tol * std::max(1.0, std::abs(z));
}

std::vector<double> classify_partial_symmetries(const BlockMatrixModel& u, double tol) {
  if (u.d != 1) throw ShapeMismatchError("classifier works on scalar models");
  std::vector<double> out;
  for (const CMat& e : u.entries) {
    const cplx z = e.at(0, 0);
    if (!scalar_partial_symmetry_relation(z, 1, tol))
      throw PrecondFailedError("entry violates the scalar partial-symmetry relation");
    double nearest = 0.0;
    for (double cand : {-1.0, 0.0, 1.0})
      if (std::abs(z - cand) < std::abs(z - nearest)) nearest = cand;
    out.push_back(nearest);
  }
  return out;
}

std::string model_to_json(const BlockMatrixModel& u) {
  nlohmann::json j;
  j["n"] = u.n;
  j["d"] = u.d;
  nlohmann::json rows = nlohmann::json::array();
  for (int z = 0; z < u.n; ++z) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < u.n; ++y) {
      nlohmann::json cell = nlohmann::json::array();
      const CMat& e = u.entry(z, y);
      for (const cplx& v : e.a) cell.push_back({v.real(), v.imag()});
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

BlockMatrixModel model_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    BlockMatrixModel u(n, d);
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw ParseError("entries must have n rows");
    for (int z = 0; z < n; ++z) {
      if (static_cast<int>(rows[static_cast<size_t>(z)].size()) != n)
        throw ParseError("entries must have n columns");
      for (int y = 0; y < n; ++y) {
        const auto& cell = rows[static_cast<size_t>(z)][static_cast<size_t>(y)];
        if (static_cast<int>(cell.size()) != d * d)
          throw ParseError("each entry must list d*d complex values");
        for (int i = 0; i < d * d; ++i) {
          const auto& pair = cell[static_cast<size_t>(i)];
          u.entry(z, y).a[static_cast<size_t>(i)] =
              cplx(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
      }
    }
    return u;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace easyq
