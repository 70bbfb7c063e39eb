#pragma once

#include <optional>
#include <vector>

#include "easyq/partition.hpp"

namespace easyq {

/// Result of gluing two diagrams. For bulleted operands the result can be
/// the zero morphism; zero == true carries no partition and no loops.
template <typename P>
struct ComposeResult {
  bool zero = false;
  int loops = 0;
  std::optional<P> partition;
};

Partition tensor(const Partition& a, const Partition& b);
BulletedPartition tensor(const BulletedPartition& a, const BulletedPartition& b);
ProductPartition tensor(const ProductPartition& a, const ProductPartition& b);

/// Glues a's lower row onto b's upper row (a: k->m, b: m->l, result k->l).
/// Blocks left with no external point are deleted and counted as loops.
ComposeResult<Partition> compose(const Partition& a, const Partition& b);
ComposeResult<BulletedPartition> compose(const BulletedPartition& a, const BulletedPartition& b);
ComposeResult<ProductPartition> compose(const ProductPartition& a, const ProductPartition& b);

Partition involute(const Partition& p);
BulletedPartition involute(const BulletedPartition& p);
ProductPartition involute(const ProductPartition& p);

/// Moves the leftmost upper point to the leftmost lower position; a
/// bulleted mark on the moved point is flipped.
Partition rotate(const Partition& p);
BulletedPartition rotate(const BulletedPartition& p);
ProductPartition rotate(const ProductPartition& p);

AnyPartition tensor(const AnyPartition& a, const AnyPartition& b);
ComposeResult<AnyPartition> compose(const AnyPartition& a, const AnyPartition& b);
AnyPartition involute(const AnyPartition& p);
AnyPartition rotate(const AnyPartition& p);

/// Least set containing the generators and the identity through-string,
/// closed under tensor, compose, involute and rotate, truncated to
/// maxPoints total points.
std::vector<Partition> closure(const std::vector<Partition>& generators, int maxPoints);
std::vector<BulletedPartition> closure(const std::vector<BulletedPartition>& generators, int maxPoints);

struct CategoryCounterexample {
  int k = 0;
  int l = 0;
  std::string encoded;
  bool inFirst = false;  // present on the A side but not the B side
};

struct CategoryComparison {
  bool equal = true;
  std::optional<CategoryCounterexample> counterexample;
};

/// Compares member sets for every shape with k+l <= maxPoints. Each side
/// is the intersection of the listed categories (all must share one
/// decoration kind).
CategoryComparison category_equal(const std::vector<CategoryId>& sideA,
                                  const std::vector<CategoryId>& sideB, int maxPoints);

}  // namespace easyq
