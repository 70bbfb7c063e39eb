#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace easyq {

enum class Color : std::uint8_t { Black = 0, White = 1 };

inline Color flipped(Color c) { return c == Color::Black ? Color::White : Color::Black; }

/// Set partition of k upper and l lower points.
///
/// Points are numbered 1..k along the upper row (left to right) and
/// k+1..k+l along the lower row (left to right). Blocks are kept in
/// canonical form: elements ascending, blocks ordered by least element.
struct Partition {
  int upper = 0;
  int lower = 0;
  std::vector<std::vector<int>> blocks;

  Partition() = default;
  Partition(int k, int l, std::vector<std::vector<int>> bs);

  int points() const { return upper + lower; }

  /// k through-strings: {i, k+i} for i = 1..k.
  static Partition identity(int k);

  /// block index for every point, 1-based point ids.
  std::vector<int> point_block_map() const;

  bool operator==(const Partition& other) const = default;
};

/// Position of a point on the boundary circle: upper row left to right,
/// then lower row right to left.
inline int circular_position(const Partition& p, int id) {
  return id <= p.upper ? id : 2 * p.upper + p.lower + 1 - id;
}

/// Planar (circular word) noncrossing test, O(points).
bool is_noncrossing(const Partition& p);

/// Whether two blocks of `p` interleave on the boundary circle.
bool blocks_cross(const Partition& p, const std::vector<int>& a, const std::vector<int>& b);

/// Partition with a black/white mark on every point, identified up to
/// flipping all marks within a block. Canonical form: the least point
/// of every block is black.
struct BulletedPartition {
  Partition base;
  std::vector<Color> colors;  // indexed by point id - 1

  BulletedPartition() = default;
  BulletedPartition(Partition b, std::vector<Color> cs);

  bool operator==(const BulletedPartition& other) const = default;
};

/// Flips marks block by block so each block's least point is black.
BulletedPartition canonicalize(const BulletedPartition& bp);

/// Two-colored partition for free products: every block carries a tag in
/// {1,2}; blocks whose factor category is bulleted also carry marks.
struct ProductPartition {
  Partition base;
  std::vector<int> tags;                     // per block, aligned with base.blocks
  std::optional<std::vector<Color>> colors;  // per point, when a factor is bulleted

  ProductPartition() = default;
  ProductPartition(Partition b, std::vector<int> ts, std::optional<std::vector<Color>> cs);

  bool operator==(const ProductPartition& other) const = default;
};

struct CategoryId {
  enum class Tag {
    P,
    NC,
    P2,
    NC2,
    P12,
    NC12,
    Peven,
    NCeven,
    Pbullet,
    NCbullet,
    NCbulletEven,
    Product
  };

  Tag tag = Tag::P;
  // factors, meaningful only when tag == Product (nesting depth <= 1)
  Tag first = Tag::P;
  Tag second = Tag::P;

  CategoryId() = default;
  CategoryId(Tag t) : tag(t) {}
  static CategoryId product(Tag c1, Tag c2);

  bool operator==(const CategoryId& other) const = default;
};

bool is_bulleted_tag(CategoryId::Tag t);
bool is_noncrossing_tag(CategoryId::Tag t);
bool block_size_allowed(CategoryId::Tag t, int size);

std::string category_name(const CategoryId& cat);
/// Parses names like "nc", "p12", "nc-bullet-even", "nc-bullet*nc".
CategoryId parse_category(const std::string& name);

using AnyPartition = std::variant<Partition, BulletedPartition, ProductPartition>;

int points_of(const AnyPartition& p);

/// Compact deterministic text encoding; doubles as the sort key for
/// enumeration output and as the dedup key in closures.
std::string encode(const Partition& p);
std::string encode(const BulletedPartition& p);
std::string encode(const ProductPartition& p);
std::string encode(const AnyPartition& p);

}  // namespace easyq
