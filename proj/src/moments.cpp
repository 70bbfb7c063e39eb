#include "easyq/moments.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "easyq/errors.hpp"

namespace easyq {

namespace {

constexpr int kMaxOrder = 14;

void guard_order(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  if (order > guarded_limit(kMaxOrder))
    throw SizeLimitError("moment/cumulant order limited to " + std::to_string(kMaxOrder));
}

// W[j][r]: sum over j nonnegative gaps totalling r of the product of
// moments m_{gap}; lets the first-block recursion run in O(order^3).
std::vector<BigRat> gap_sums(const std::vector<BigRat>& m0k, int gaps, int upTo) {
  std::vector<BigRat> w(static_cast<size_t>(upTo) + 1, BigRat(0));
  w[0] = 1;
  for (int j = 0; j < gaps; ++j) {
    std::vector<BigRat> next(static_cast<size_t>(upTo) + 1, BigRat(0));
    for (int r = 0; r <= upTo; ++r) {
      if (w[static_cast<size_t>(r)] == 0) continue;
      for (int g = 0; r + g <= upTo; ++g)
        next[static_cast<size_t>(r + g)] += w[static_cast<size_t>(r)] * m0k[static_cast<size_t>(g)];
    }
    w = std::move(next);
  }
  return w;
}

}  // namespace

MomentSeries moments_from_cumulants(const CumulantSeries& kappa, int order) {
  guard_order(order);
  if (kappa.order() < order) throw std::invalid_argument("not enough cumulants");

  std::vector<BigRat> m(static_cast<size_t>(order) + 1, BigRat(0));  // m[0] = 1
  m[0] = 1;
  for (int n = 1; n <= order; ++n) {
    BigRat total = 0;
    for (int j = 1; j <= n; ++j) {
      // block of the first point has j legs, leaving n-j points in gaps
      const auto w = gap_sums(m, j, n - j);
      total += kappa.cumulant(j) * w[static_cast<size_t>(n - j)];
    }
    m[static_cast<size_t>(n)] = total;
  }
  MomentSeries out;
  out.values.assign(m.begin() + 1, m.end());
  return out;
}

CumulantSeries cumulants_from_moments(const MomentSeries& moments, int order) {
  guard_order(order);
  if (moments.order() < order) throw std::invalid_argument("not enough moments");

  std::vector<BigRat> m(static_cast<size_t>(order) + 1, BigRat(0));
  m[0] = 1;
  for (int n = 1; n <= order; ++n) m[static_cast<size_t>(n)] = moments.moment(n);

  CumulantSeries kappa;
  kappa.values.assign(static_cast<size_t>(order), BigRat(0));
  for (int n = 1; n <= order; ++n) {
    BigRat rest = 0;
    for (int j = 1; j < n; ++j) {
      const auto w = gap_sums(m, j, n - j);
      rest += kappa.cumulant(j) * w[static_cast<size_t>(n - j)];
    }
    kappa.values[static_cast<size_t>(n - 1)] = m[static_cast<size_t>(n)] - rest;
  }
  return kappa;
}

MomentSeries free_convolve(const MomentSeries& a, const MomentSeries& b, int order) {
  guard_order(order);
  const CumulantSeries ka = cumulants_from_moments(a, order);
  const CumulantSeries kb = cumulants_from_moments(b, order);
  CumulantSeries sum;
  sum.values.reserve(static_cast<size_t>(order));
  for (int i = 0; i < order; ++i)
    sum.values.push_back(ka.values[static_cast<size_t>(i)] + kb.values[static_cast<size_t>(i)]);
  return moments_from_cumulants(sum, order);
}

MomentSeries dilate(const MomentSeries& m, const BigRat& s) {
  MomentSeries out = m;
  BigRat power = 1;
  for (size_t i = 0; i < out.values.size(); ++i) {
    power *= s;
    out.values[i] *= power;
  }
  return out;
}

MomentSeries free_poisson(const BigRat& t, int order) {
  guard_order(order);
  CumulantSeries kappa;
  kappa.values.assign(static_cast<size_t>(order), t);
  return moments_from_cumulants(kappa, order);
}

BigInt character_count(const CategoryId& cat, int k, const std::function<BigInt(int)>& weight) {
  if (k > guarded_limit(10)) throw SizeLimitError("weighted counts limited to 10 points");
  BigInt total = 0;
  visit_category(cat, 0, k, [&](const AnyPartition& p) {
    const Partition& base = std::visit(
        [](const auto& v) -> const Partition& {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Partition>)
            return v;
          else
            return v.base;
        },
        p);
    BigInt term = 1;
    for (const auto& block : base.blocks) term *= weight(static_cast<int>(block.size()));
    total += term;
    return true;
  });
  return total;
}

BigInt finite_group_moment(FiniteGroup g, int q, int k) {
  if (q > guarded_limit(6) || k > guarded_limit(8))
    throw SizeLimitError("finite group moments limited to q <= 6, k <= 8");

  auto ipow = [](BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };

  std::vector<int> perm(static_cast<size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  BigInt groupOrder = 0;
  do {
    int fixedIdx[8];
    int fixedCount = 0;
    for (int i = 0; i < q; ++i)
      if (perm[static_cast<size_t>(i)] == i) fixedIdx[fixedCount++] = i;

    if (g == FiniteGroup::S) {
      total += ipow(BigInt(fixedCount), k);
      ++groupOrder;
    } else {
      // signed permutations: only signs at fixed points reach the trace,
      // but the average runs over the whole group
      for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
        long long trace = 0;
        for (int f = 0; f < fixedCount; ++f)
          trace += (mask >> fixedIdx[f] & 1) ? -1 : 1;
        total += ipow(BigInt(trace), k);
        ++groupOrder;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (total % groupOrder != 0)
    throw std::logic_error("finite group moment average is not an integer");
  return total / groupOrder;
}

BigInt ncjoin_count(int k, int l) {
  if (k + l > guarded_limit(7)) throw SizeLimitError("joined counts limited to k+l <= 7");

  const CategoryId nc(CategoryId::Tag::NC);
  BigInt joined = 0;
  visit_category(nc, 2 * k, 2 * l, [&](const AnyPartition& ap) {
    const Partition& p = std::get<Partition>(ap);
    const auto map = p.point_block_map();
    for (int a = 0; a < k; ++a)
      if (map[static_cast<size_t>(2 * a + 1)] != map[static_cast<size_t>(2 * a + 2)]) return true;
    for (int b = 0; b < l; ++b)
      if (map[static_cast<size_t>(2 * k + 2 * b + 1)] != map[static_cast<size_t>(2 * k + 2 * b + 2)])
        return true;
    ++joined;
    return true;
  });

  BigInt collapsed = 0;
  visit_category(nc, k, l, [&](const AnyPartition&) {
    ++collapsed;
    return true;
  });
  if (joined != collapsed)
    throw std::logic_error("collapsing bijection violated: " + joined.str() + " vs " +
                           collapsed.str());
  return joined;
}

}  // namespace easyq
