#include "easyq/intertwiner.hpp"

#include <algorithm>
#include <stdexcept>

#include "easyq/enumerate.hpp"
#include "easyq/errors.hpp"
#include "easyq/exact_linalg.hpp"

namespace easyq {

namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

constexpr long long kDimLimit = 1LL << 15;
constexpr long long kDenseLimit = 1LL << 22;

void guard_dims(int n, int k, int l) {
  if (ipow(n, k) > kDimLimit || ipow(n, l) > kDimLimit)
    throw SizeLimitError("tensor power dimension exceeds 2^15");
}

}  // namespace

long long encode_tuple(const std::vector<int>& tuple, int n) {
  long long code = 0;
  for (int v : tuple) code = code * n + v;
  return code;
}

std::vector<int> decode_tuple(long long code, int len, int n) {
  std::vector<int> out(static_cast<size_t>(len), 0);
  for (int t = len - 1; t >= 0; --t) {
    out[static_cast<size_t>(t)] = static_cast<int>(code % n);
    code /= n;
  }
  return out;
}

DeltaSolver::DeltaSolver(const Partition& p, const IndexSpace& space) : space_(space) {
  build(p, nullptr, nullptr);
}

DeltaSolver::DeltaSolver(const BulletedPartition& p, const IndexSpace& space) : space_(space) {
  if (space.q != 0)
    throw UnsupportedImplError("bulleted partitions act on a pure pair part (q = 0)");
  build(p.base, &p.colors, nullptr);
}

DeltaSolver::DeltaSolver(const ProductPartition& p, const IndexSpace& space) : space_(space) {
  if (!p.colors)
    throw UnsupportedImplError("product implementation needs marks on tag-1 blocks");
  build(p.base, &*p.colors, &p.tags);
}

DeltaSolver::DeltaSolver(const AnyPartition& p, const IndexSpace& space)
    : DeltaSolver(  // delegate via visit
          [&]() -> DeltaSolver {
            return std::visit([&](const auto& v) { return DeltaSolver(v, space); }, p);
          }()) {}

void DeltaSolver::build(const Partition& p, const std::vector<Color>* colors,
                        const std::vector<int>* tags) {
  k_ = p.upper;
  l_ = p.lower;
  plans_.clear();
  plans_.reserve(p.blocks.size());

  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& block = p.blocks[b];
    BlockPlan plan;
    plan.anchorLo = 0;
    plan.anchorHi = space_.n();
    if (tags) {
      if ((*tags)[b] == 1) {
        plan.anchorLo = 0;
        plan.anchorHi = 2 * space_.p;
      } else {
        plan.anchorLo = 2 * space_.p;
        plan.anchorHi = space_.n();
      }
    }

    // anchor = first point of the block in (upper then lower) traversal
    const bool tag2 = tags && (*tags)[b] == 2;
    const bool useColors = colors && !tag2;
    const Color anchorColor = useColors ? (*colors)[static_cast<size_t>(block.front() - 1)] : Color::Black;

    int upperSeen = 0;
    int lowerSeen = 0;
    bool anchorIsUpper = false;
    bool first = true;
    for (int x : block) {
      PointRel rel;
      const bool isUpper = x <= p.upper;
      rel.pos = isUpper ? x - 1 : x - p.upper - 1;
      if (tag2) {
        rel.barred = false;  // constant block
      } else if (useColors) {
        rel.barred = (*colors)[static_cast<size_t>(x - 1)] != anchorColor;
      } else {
        // alternation is per row, both rows led by the shared value
        const int posInRow = isUpper ? upperSeen : lowerSeen;
        rel.barred = posInRow % 2 == 1;
      }
      if (first) {
        anchorIsUpper = isUpper;
        first = false;
      }
      (isUpper ? plan.upperPts : plan.lowerPts).push_back(rel);
      ++(isUpper ? upperSeen : lowerSeen);
    }
    (void)anchorIsUpper;
    plans_.push_back(std::move(plan));
  }
}

int DeltaSolver::check(const std::vector<int>& upperIdx, const std::vector<int>& lowerIdx) const {
  if (static_cast<int>(upperIdx.size()) != k_ || static_cast<int>(lowerIdx.size()) != l_)
    throw ShapeMismatchError("index tuple length mismatch");
  for (const auto& plan : plans_) {
    int anchor = -1;
    auto resolve = [&](const PointRel& rel, int value) -> bool {
      const int a = rel.barred ? space_.bar(value) : value;
      if (anchor < 0) {
        anchor = a;
        return a >= plan.anchorLo && a < plan.anchorHi;
      }
      return a == anchor;
    };
    for (const auto& rel : plan.upperPts)
      if (!resolve(rel, upperIdx[static_cast<size_t>(rel.pos)])) return 0;
    for (const auto& rel : plan.lowerPts)
      if (!resolve(rel, lowerIdx[static_cast<size_t>(rel.pos)])) return 0;
  }
  return 1;
}

int DeltaSolver::free_blocks() const {
  int f = 0;
  for (const auto& plan : plans_)
    if (plan.upperPts.empty()) ++f;
  return f;
}

std::vector<long long> DeltaSolver::column(const std::vector<int>& upperIdx) const {
  if (static_cast<int>(upperIdx.size()) != k_)
    throw ShapeMismatchError("index tuple length mismatch");
  const int n = space_.n();

  // resolve anchored blocks, collect the free ones
  std::vector<int> lowerValue(static_cast<size_t>(l_), -1);
  std::vector<const BlockPlan*> freePlans;
  for (const auto& plan : plans_) {
    if (plan.upperPts.empty()) {
      freePlans.push_back(&plan);
      continue;
    }
    int anchor = -1;
    bool ok = true;
    for (const auto& rel : plan.upperPts) {
      const int a = rel.barred ? space_.bar(upperIdx[static_cast<size_t>(rel.pos)])
                               : upperIdx[static_cast<size_t>(rel.pos)];
      if (anchor < 0) {
        anchor = a;
        ok = a >= plan.anchorLo && a < plan.anchorHi;
      } else {
        ok = a == anchor;
      }
      if (!ok) break;
    }
    if (!ok) return {};
    for (const auto& rel : plan.lowerPts)
      lowerValue[static_cast<size_t>(rel.pos)] = rel.barred ? space_.bar(anchor) : anchor;
  }

  std::vector<long long> out;
  std::vector<int> lower = lowerValue;
  auto rec = [&](auto&& self, size_t fi) -> void {
    if (fi == freePlans.size()) {
      out.push_back(encode_tuple(lower, n));
      return;
    }
    const BlockPlan& plan = *freePlans[fi];
    for (int z = plan.anchorLo; z < plan.anchorHi; ++z) {
      for (const auto& rel : plan.lowerPts)
        lower[static_cast<size_t>(rel.pos)] = rel.barred ? space_.bar(z) : z;
      self(self, fi + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> DeltaSolver::column(long long upperCode) const {
  return column(decode_tuple(upperCode, k_, space_.n()));
}

int delta(const Partition& p, const std::vector<int>& i, const std::vector<int>& j,
          const IndexSpace& space) {
  return DeltaSolver(p, space).check(i, j);
}

int delta(const BulletedPartition& p, const std::vector<int>& i, const std::vector<int>& j,
          const IndexSpace& space) {
  return DeltaSolver(p, space).check(i, j);
}

int delta(const ProductPartition& p, const std::vector<int>& i, const std::vector<int>& j,
          const IndexSpace& space) {
  return DeltaSolver(p, space).check(i, j);
}

long long delta_general_f(const Partition& pairing, const std::vector<int>& i,
                          const std::vector<int>& j, const IntMatrix& f) {
  long long value = 1;
  for (const auto& block : pairing.blocks) {
    if (block.size() != 2)
      throw UnsupportedImplError("the general-F rule is defined on pair partitions");
    const int a = block[0];
    const int b = block[1];
    const bool aUp = a <= pairing.upper;
    const bool bUp = b <= pairing.upper;
    const int va = aUp ? i[static_cast<size_t>(a - 1)] : j[static_cast<size_t>(a - pairing.upper - 1)];
    const int vb = bUp ? i[static_cast<size_t>(b - 1)] : j[static_cast<size_t>(b - pairing.upper - 1)];
    if (aUp == bUp) {
      value *= f[static_cast<size_t>(va)][static_cast<size_t>(vb)];  // horizontal string
    } else {
      if (va != vb) return 0;  // vertical string
    }
    if (value == 0) return 0;
  }
  return value;
}

IntMatrix t_matrix(const AnyPartition& p, const IndexSpace& space) {
  const DeltaSolver solver(p, space);
  const int n = space.n();
  guard_dims(n, solver.upper(), solver.lower());
  const long long rows = ipow(n, solver.lower());
  const long long cols = ipow(n, solver.upper());
  if (rows * cols > kDenseLimit) throw SizeLimitError("dense T matrix exceeds 2^22 entries");

  IntMatrix m(static_cast<size_t>(rows), std::vector<long long>(static_cast<size_t>(cols), 0));
  for (long long c = 0; c < cols; ++c)
    for (long long r : solver.column(c)) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = 1;
  return m;
}

IntMatrix t_matrix_general_f(const Partition& pairing, const IntMatrix& f) {
  const int n = static_cast<int>(f.size());
  guard_dims(n, pairing.upper, pairing.lower);
  const long long rows = ipow(n, pairing.lower);
  const long long cols = ipow(n, pairing.upper);
  if (rows * cols > kDenseLimit) throw SizeLimitError("dense T matrix exceeds 2^22 entries");

  IntMatrix m(static_cast<size_t>(rows), std::vector<long long>(static_cast<size_t>(cols), 0));
  for (long long c = 0; c < cols; ++c) {
    const auto i = decode_tuple(c, pairing.upper, n);
    for (long long r = 0; r < rows; ++r) {
      const auto j = decode_tuple(r, pairing.lower, n);
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] = delta_general_f(pairing, i, j, f);
    }
  }
  return m;
}

IntMatrix xi_column(const IndexSpace& space) {
  const Partition pair(0, 2, {{1, 2}});
  return t_matrix(AnyPartition(pair), space);
}

IntMatrix eta_column(const IndexSpace& space) {
  const Partition single(0, 1, {{1}});
  return t_matrix(AnyPartition(single), space);
}

IntMatrix diag_fork_matrix(const IndexSpace& space, int copies, bool startBarred) {
  const int n = space.n();
  guard_dims(n, 1, copies);
  const long long rows = ipow(n, copies);
  IntMatrix m(static_cast<size_t>(rows), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int z = 0; z < n; ++z) {
    std::vector<int> tuple(static_cast<size_t>(copies));
    for (int t = 0; t < copies; ++t) {
      const bool barred = (t % 2 == 0) == startBarred;
      tuple[static_cast<size_t>(t)] = barred ? space.bar(z) : z;
    }
    m[static_cast<size_t>(encode_tuple(tuple, n))][static_cast<size_t>(z)] = 1;
  }
  return m;
}

int gram_rank(const std::vector<AnyPartition>& ps, const IndexSpace& space) {
  if (ps.empty()) return 0;
  std::vector<DeltaSolver> solvers;
  solvers.reserve(ps.size());
  for (const auto& p : ps) solvers.emplace_back(p, space);
  const int k = solvers.front().upper();
  const int l = solvers.front().lower();
  for (const auto& s : solvers)
    if (s.upper() != k || s.lower() != l)
      throw ShapeMismatchError("gram operands must share one shape");
  guard_dims(space.n(), k, l);

  const size_t m = ps.size();
  BigIntMatrix gram(m, std::vector<boost::multiprecision::cpp_int>(m, 0));
  const long long cols = ipow(space.n(), k);
  std::vector<std::vector<long long>> sols(m);
  for (long long c = 0; c < cols; ++c) {
    for (size_t a = 0; a < m; ++a) sols[a] = solvers[a].column(c);
    for (size_t a = 0; a < m; ++a)
      for (size_t b = a; b < m; ++b) {
        // sorted intersection size
        long long common = 0;
        const auto& va = sols[a];
        const auto& vb = sols[b];
        size_t x = 0;
        size_t y = 0;
        while (x < va.size() && y < vb.size()) {
          if (va[x] < vb[y])
            ++x;
          else if (va[x] > vb[y])
            ++y;
          else {
            ++common;
            ++x;
            ++y;
          }
        }
        gram[a][b] += common;
        if (b != a) gram[b][a] += common;
      }
  }
  return exact_rank(std::move(gram));
}

int fix_dim(const CategoryId& cat, int k, const IndexSpace& space) {
  return gram_rank(enumerate(cat, 0, k), space);
}

IntertwinerCheck is_intertwiner(const IntMatrix& t, const BlockMatrixModel& u, int k, int l,
                                double tol) {
  const int n = u.n;
  const long long rows = ipow(n, l);
  const long long cols = ipow(n, k);
  if (static_cast<long long>(t.size()) != rows ||
      (rows > 0 && static_cast<long long>(t[0].size()) != cols))
    throw ShapeMismatchError("T must be n^l x n^k");
  if (ipow(n, std::max(k, l)) * u.d > (1LL << 13))
    throw SizeLimitError("tensor power model exceeds the 2^13 guardrail");

  const CMat uk = tensor_power_flat(u, k);
  const CMat ul = tensor_power_flat(u, l);
  const int d = u.d;

  // T ⊗ 1_d as an (n^l d) x (n^k d) complex matrix
  CMat tFlat(static_cast<int>(rows) * d, static_cast<int>(cols) * d);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c) {
      const long long v = t[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (v == 0) continue;
      for (int x = 0; x < d; ++x)
        tFlat.at(static_cast<int>(r) * d + x, static_cast<int>(c) * d + x) = static_cast<double>(v);
    }

  const CMat lhs = mul(ul, tFlat);
  const CMat rhs = mul(tFlat, uk);
  const double res = rel_residual(lhs, rhs);
  return {res <= tol, res};
}

}  // namespace easyq
