#pragma once

// Independent reference implementations the tests check the library
// against. Everything here recomputes from first principles and must not
// call back into the code paths under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "easyq/partition.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt catalan(int n) {
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j) c[static_cast<size_t>(i)] += c[static_cast<size_t>(j)] * c[static_cast<size_t>(i - 1 - j)];
  return c[static_cast<size_t>(n)];
}

inline BigInt bell(int n) {
  // Bell triangle
  std::vector<BigInt> row = {1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (size_t j = 0; j < row.size(); ++j) next.push_back(next[j] + row[j]);
    row = std::move(next);
  }
  return row.front();
}

inline BigInt motzkin(int n) {
  std::vector<BigInt> m(static_cast<size_t>(n) + 1, 0);
  m[0] = 1;
  for (int i = 1; i <= n; ++i) {
    m[static_cast<size_t>(i)] = m[static_cast<size_t>(i - 1)];
    for (int j = 0; j <= i - 2; ++j)
      m[static_cast<size_t>(i)] += m[static_cast<size_t>(j)] * m[static_cast<size_t>(i - 2 - j)];
  }
  return m[static_cast<size_t>(n)];
}

// Pairwise block-crossing test on the boundary circle, O(points^2).
inline bool noncrossing_pairwise(const easyq::Partition& p) {
  auto positions = [&](const std::vector<int>& block) {
    std::vector<int> pos;
    pos.reserve(block.size());
    for (int x : block) pos.push_back(easyq::circular_position(p, x));
    std::sort(pos.begin(), pos.end());
    return pos;
  };
  for (size_t a = 0; a < p.blocks.size(); ++a)
    for (size_t b = a + 1; b < p.blocks.size(); ++b) {
      const auto pa = positions(p.blocks[a]);
      const auto pb = positions(p.blocks[b]);
      std::vector<std::pair<int, int>> merged;
      for (int x : pa) merged.emplace_back(x, 0);
      for (int x : pb) merged.emplace_back(x, 1);
      std::sort(merged.begin(), merged.end());
      int switches = 0;
      for (size_t i = 1; i < merged.size(); ++i)
        if (merged[i].second != merged[i - 1].second) ++switches;
      if (switches >= 3) return false;
    }
  return true;
}

// All set partitions of {1..m} by direct extension.
inline void all_set_partitions(int m,
                               const std::function<void(const std::vector<std::vector<int>>&)>& cb) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > m) {
      cb(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
}

// Noncrossing members of P(k,l) by filtering every set partition.
inline std::vector<easyq::Partition> brute_noncrossing(int k, int l) {
  std::vector<easyq::Partition> out;
  all_set_partitions(k + l, [&](const std::vector<std::vector<int>>& bs) {
    easyq::Partition p(k, l, bs);
    if (noncrossing_pairwise(p)) out.push_back(std::move(p));
  });
  return out;
}

// Bulleted members over a base family: every coloring, deduplicated by
// whole-block flips.
inline std::set<std::string> brute_bulleted_keys(const std::vector<easyq::Partition>& bases) {
  std::set<std::string> keys;
  for (const auto& base : bases) {
    const int m = base.points();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<easyq::Color> colors(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i)
        colors[static_cast<size_t>(i)] = (mask >> i & 1) ? easyq::Color::White : easyq::Color::Black;
      // canonical representative: flip any block whose least point is white
      easyq::BulletedPartition bp(base, colors);
      keys.insert(encode(canonicalize(bp)));
    }
  }
  return keys;
}

}  // namespace oracle
