#include "easyq/diagram_ops.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "easyq/enumerate.hpp"
#include "easyq/errors.hpp"

namespace easyq {

namespace {

// --- tensor ---------------------------------------------------------------

// Shifts b's point ids into the juxtaposed diagram.
int shifted_id(int id, int ka, int la, int kb) {
  return id <= kb ? ka + id : ka + la + id;
}

Partition tensor_base(const Partition& a, const Partition& b) {
  std::vector<std::vector<int>> blocks = a.blocks;
  for (auto& blk : blocks)
    for (int& x : blk)
      if (x > a.upper) x += b.upper;
  for (const auto& blk : b.blocks) {
    std::vector<int> nb;
    nb.reserve(blk.size());
    for (int x : blk) nb.push_back(shifted_id(x, a.upper, a.lower, b.upper));
    blocks.push_back(std::move(nb));
  }
  return Partition(a.upper + b.upper, a.lower + b.lower, std::move(blocks));
}

std::vector<Color> tensor_colors(const Partition& a, const Partition& b,
                                 const std::vector<Color>& ca, const std::vector<Color>& cb) {
  std::vector<Color> out(static_cast<size_t>(a.points() + b.points()), Color::Black);
  for (int id = 1; id <= a.points(); ++id) {
    const int nid = id <= a.upper ? id : id + b.upper;
    out[static_cast<size_t>(nid - 1)] = ca[static_cast<size_t>(id - 1)];
  }
  for (int id = 1; id <= b.points(); ++id) {
    const int nid = shifted_id(id, a.upper, a.lower, b.upper);
    out[static_cast<size_t>(nid - 1)] = cb[static_cast<size_t>(id - 1)];
  }
  return out;
}

// --- compose core ----------------------------------------------------------

// Union-find over the blocks of both operands with an optional mark-flip
// parity per block. Gluing point t identifies a's block at point k+t with
// b's block at point t; with marks, the relative flip must make the two
// colors at the glued point agree.
struct ParityDsu {
  std::vector<int> parent;
  std::vector<std::uint8_t> parity;  // flip relative to parent

  explicit ParityDsu(size_t n) : parent(n), parity(n, 0) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }

  std::pair<int, std::uint8_t> find(int x) {
    if (parent[static_cast<size_t>(x)] == x) return {x, 0};
    auto [root, par] = find(parent[static_cast<size_t>(x)]);
    parent[static_cast<size_t>(x)] = root;
    parity[static_cast<size_t>(x)] ^= par;
    return {root, parity[static_cast<size_t>(x)]};
  }

  // Returns false on a parity contradiction.
  bool unite(int x, int y, std::uint8_t rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    parent[static_cast<size_t>(ry)] = rx;
    parity[static_cast<size_t>(ry)] = static_cast<std::uint8_t>(px ^ py ^ rel);
    return true;
  }
};

struct GlueOutcome {
  bool zero = false;
  int loops = 0;
  Partition result;
  std::vector<Color> colors;      // for the result's points
  std::vector<int> resultTags;    // per result block
};

// withMarks: enforce mark consistency (zero on failure) and carry colors.
// tags: per-operand-block tag or empty; a tag mismatch at a glued point
// makes the result zero.
GlueOutcome glue(const Partition& a, const Partition& b, const std::vector<Color>* colA,
                 const std::vector<Color>* colB, const std::vector<int>* tagA,
                 const std::vector<int>* tagB) {
  if (a.lower != b.upper)
    throw ShapeMismatchError("compose needs a.lower == b.upper, got " + std::to_string(a.lower) +
                             " and " + std::to_string(b.upper));
  GlueOutcome out;
  const auto mapA = a.point_block_map();
  const auto mapB = b.point_block_map();
  const size_t nA = a.blocks.size();
  const size_t nodes = nA + b.blocks.size();
  ParityDsu dsu(nodes);

  for (int t = 1; t <= a.lower; ++t) {
    const int blockA = mapA[static_cast<size_t>(a.upper + t)];
    const int blockB = static_cast<int>(nA) + mapB[static_cast<size_t>(t)];
    if (tagA && (*tagA)[static_cast<size_t>(blockA)] != (*tagB)[static_cast<size_t>(blockB - nA)]) {
      out.zero = true;
      return out;
    }
    std::uint8_t rel = 0;
    if (colA) {
      const Color ca = (*colA)[static_cast<size_t>(a.upper + t - 1)];
      const Color cb = (*colB)[static_cast<size_t>(t - 1)];
      rel = static_cast<std::uint8_t>(ca != cb);
    }
    if (!dsu.unite(blockA, blockB, rel)) {
      out.zero = true;
      return out;
    }
  }

  // components -> result blocks / loops
  const int k = a.upper;
  const int l = b.lower;
  std::vector<int> compOf(nodes, -1);  // root node -> block index
  std::vector<std::vector<int>> blocks;
  std::vector<int> resultTags;

  std::vector<Color> colors(static_cast<size_t>(k + l), Color::Black);
  auto place = [&](int node, int externalId, Color orig) {
    auto [root, par] = dsu.find(node);
    if (compOf[static_cast<size_t>(root)] < 0) {
      compOf[static_cast<size_t>(root)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
      if (tagA)
        resultTags.push_back(root < static_cast<int>(nA)
                                 ? (*tagA)[static_cast<size_t>(root)]
                                 : (*tagB)[static_cast<size_t>(root) - nA]);
    }
    blocks[static_cast<size_t>(compOf[static_cast<size_t>(root)])].push_back(externalId);
    colors[static_cast<size_t>(externalId - 1)] = par ? flipped(orig) : orig;
  };

  for (int id = 1; id <= k; ++id)
    place(mapA[static_cast<size_t>(id)], id, colA ? (*colA)[static_cast<size_t>(id - 1)] : Color::Black);
  for (int j = 1; j <= l; ++j)
    place(static_cast<int>(nA) + mapB[static_cast<size_t>(b.upper + j)], k + j,
          colB ? (*colB)[static_cast<size_t>(b.upper + j - 1)] : Color::Black);

  // loops: components that caught no external point
  int liveRoots = 0;
  for (size_t i = 0; i < nodes; ++i)
    if (dsu.find(static_cast<int>(i)).first == static_cast<int>(i)) ++liveRoots;
  out.loops = liveRoots - static_cast<int>(blocks.size());

  // blocks came out in order of least external point, which is the
  // canonical order, so the tags are already aligned
  out.resultTags = std::move(resultTags);
  out.result = Partition(k, l, std::move(blocks));
  out.colors = std::move(colors);
  return out;
}

// --- involute/rotate id maps ------------------------------------------------

int involute_id(const Partition& p, int id) { return id <= p.upper ? p.lower + id : id - p.upper; }

int rotate_id(const Partition& p, int id) {
  // 1 -> leftmost lower slot; other upper ids shift left by one
  return id == 1 ? p.upper : id <= p.upper ? id - 1 : id;
}

Partition map_ids(const Partition& p, int k, int l, int (*f)(const Partition&, int)) {
  std::vector<std::vector<int>> blocks = p.blocks;
  for (auto& blk : blocks)
    for (int& x : blk) x = f(p, x);
  return Partition(k, l, std::move(blocks));
}

std::vector<Color> map_colors(const Partition& p, const std::vector<Color>& colors,
                              int (*f)(const Partition&, int)) {
  std::vector<Color> out(colors.size(), Color::Black);
  for (int id = 1; id <= p.points(); ++id)
    out[static_cast<size_t>(f(p, id) - 1)] = colors[static_cast<size_t>(id - 1)];
  return out;
}

std::vector<int> reordered_tags(const Partition& before, const Partition& after,
                                const std::vector<int>& tags, int (*f)(const Partition&, int)) {
  // blocks are re-sorted by least element after the id map
  std::unordered_map<int, int> tagByAnyPoint;
  for (size_t b = 0; b < before.blocks.size(); ++b)
    for (int x : before.blocks[b]) tagByAnyPoint[f(before, x)] = tags[b];
  std::vector<int> out;
  out.reserve(after.blocks.size());
  for (const auto& blk : after.blocks) out.push_back(tagByAnyPoint.at(blk.front()));
  return out;
}

void require_rotatable(const Partition& p) {
  if (p.upper == 0) throw NothingToRotateError("rotate needs at least one upper point");
}

}  // namespace

Partition tensor(const Partition& a, const Partition& b) { return tensor_base(a, b); }

BulletedPartition tensor(const BulletedPartition& a, const BulletedPartition& b) {
  return canonicalize(BulletedPartition(tensor_base(a.base, b.base),
                                        tensor_colors(a.base, b.base, a.colors, b.colors)));
}

ProductPartition tensor(const ProductPartition& a, const ProductPartition& b) {
  Partition base = tensor_base(a.base, b.base);
  // canonical block order interleaves the operands; recover tags per block
  std::vector<int> tags;
  {
    std::unordered_map<int, int> tagByPoint;
    for (size_t blk = 0; blk < a.base.blocks.size(); ++blk)
      for (int x : a.base.blocks[blk])
        tagByPoint[x <= a.base.upper ? x : x + b.base.upper] = a.tags[blk];
    for (size_t blk = 0; blk < b.base.blocks.size(); ++blk)
      for (int x : b.base.blocks[blk])
        tagByPoint[shifted_id(x, a.base.upper, a.base.lower, b.base.upper)] = b.tags[blk];
    for (const auto& blk : base.blocks) tags.push_back(tagByPoint.at(blk.front()));
  }
  std::optional<std::vector<Color>> colors;
  if (a.colors || b.colors) {
    const std::vector<Color> ca =
        a.colors ? *a.colors : std::vector<Color>(static_cast<size_t>(a.base.points()), Color::Black);
    const std::vector<Color> cb =
        b.colors ? *b.colors : std::vector<Color>(static_cast<size_t>(b.base.points()), Color::Black);
    colors = tensor_colors(a.base, b.base, ca, cb);
  }
  return ProductPartition(std::move(base), std::move(tags), std::move(colors));
}

ComposeResult<Partition> compose(const Partition& a, const Partition& b) {
  auto g = glue(a, b, nullptr, nullptr, nullptr, nullptr);
  ComposeResult<Partition> out;
  out.loops = g.loops;
  out.partition = std::move(g.result);
  return out;
}

ComposeResult<BulletedPartition> compose(const BulletedPartition& a, const BulletedPartition& b) {
  auto g = glue(a.base, b.base, &a.colors, &b.colors, nullptr, nullptr);
  ComposeResult<BulletedPartition> out;
  if (g.zero) {
    out.zero = true;
    return out;
  }
  out.loops = g.loops;
  out.partition = canonicalize(BulletedPartition(std::move(g.result), std::move(g.colors)));
  return out;
}

ComposeResult<ProductPartition> compose(const ProductPartition& a, const ProductPartition& b) {
  const std::vector<Color> ca =
      a.colors ? *a.colors : std::vector<Color>(static_cast<size_t>(a.base.points()), Color::Black);
  const std::vector<Color> cb =
      b.colors ? *b.colors : std::vector<Color>(static_cast<size_t>(b.base.points()), Color::Black);
  auto g = glue(a.base, b.base, &ca, &cb, &a.tags, &b.tags);
  ComposeResult<ProductPartition> out;
  if (g.zero) {
    out.zero = true;
    return out;
  }
  out.loops = g.loops;
  std::optional<std::vector<Color>> colors;
  if (a.colors || b.colors) {
    // re-canonicalize marks block by block
    BulletedPartition tmp = canonicalize(BulletedPartition(g.result, g.colors));
    colors = std::move(tmp.colors);
  }
  out.partition = ProductPartition(std::move(g.result), std::move(g.resultTags), std::move(colors));
  return out;
}

Partition involute(const Partition& p) { return map_ids(p, p.lower, p.upper, involute_id); }

BulletedPartition involute(const BulletedPartition& p) {
  return canonicalize(
      BulletedPartition(involute(p.base), map_colors(p.base, p.colors, involute_id)));
}

ProductPartition involute(const ProductPartition& p) {
  Partition base = involute(p.base);
  std::vector<int> tags = reordered_tags(p.base, base, p.tags, involute_id);
  std::optional<std::vector<Color>> colors;
  if (p.colors) {
    BulletedPartition tmp = canonicalize(BulletedPartition(base, map_colors(p.base, *p.colors, involute_id)));
    colors = std::move(tmp.colors);
  }
  return ProductPartition(std::move(base), std::move(tags), std::move(colors));
}

Partition rotate(const Partition& p) {
  require_rotatable(p);
  return map_ids(p, p.upper - 1, p.lower + 1, rotate_id);
}

BulletedPartition rotate(const BulletedPartition& p) {
  require_rotatable(p.base);
  std::vector<Color> colors = map_colors(p.base, p.colors, rotate_id);
  const size_t moved = static_cast<size_t>(p.base.upper - 1);  // new id of old point 1
  colors[moved] = flipped(colors[moved]);
  return canonicalize(BulletedPartition(rotate(p.base), std::move(colors)));
}

ProductPartition rotate(const ProductPartition& p) {
  require_rotatable(p.base);
  Partition base = rotate(p.base);
  std::vector<int> tags = reordered_tags(p.base, base, p.tags, rotate_id);
  std::optional<std::vector<Color>> colors;
  if (p.colors) {
    std::vector<Color> cs = map_colors(p.base, *p.colors, rotate_id);
    // only the marked (tag-1) blocks see the duality flip
    const int movedBlock = p.base.point_block_map()[1];
    if (p.tags[static_cast<size_t>(movedBlock)] == 1) {
      const size_t moved = static_cast<size_t>(p.base.upper - 1);
      cs[moved] = flipped(cs[moved]);
    }
    BulletedPartition tmp = canonicalize(BulletedPartition(base, std::move(cs)));
    colors = std::move(tmp.colors);
  }
  return ProductPartition(std::move(base), std::move(tags), std::move(colors));
}

namespace {

template <typename F>
auto on_same_kind(const AnyPartition& a, const AnyPartition& b, F&& f) {
  if (a.index() != b.index()) throw KindMismatchError("operands carry different decorations");
  return std::visit(
      [&](const auto& va) {
        using T = std::decay_t<decltype(va)>;
        return f(va, std::get<T>(b));
      },
      a);
}

}  // namespace

AnyPartition tensor(const AnyPartition& a, const AnyPartition& b) {
  return on_same_kind(a, b, [](const auto& x, const auto& y) { return AnyPartition(tensor(x, y)); });
}

ComposeResult<AnyPartition> compose(const AnyPartition& a, const AnyPartition& b) {
  return on_same_kind(a, b, [](const auto& x, const auto& y) {
    auto r = compose(x, y);
    ComposeResult<AnyPartition> out;
    out.zero = r.zero;
    out.loops = r.loops;
    if (r.partition) out.partition = AnyPartition(*r.partition);
    return out;
  });
}

AnyPartition involute(const AnyPartition& p) {
  return std::visit([](const auto& v) { return AnyPartition(involute(v)); }, p);
}

AnyPartition rotate(const AnyPartition& p) {
  return std::visit([](const auto& v) { return AnyPartition(rotate(v)); }, p);
}

namespace {

template <typename P>
P identity_like(int k);

template <>
Partition identity_like<Partition>(int k) {
  return Partition::identity(k);
}

template <>
BulletedPartition identity_like<BulletedPartition>(int k) {
  return BulletedPartition(Partition::identity(k),
                           std::vector<Color>(static_cast<size_t>(2 * k), Color::Black));
}

// Compact dedup key: one byte per point carrying the block index in
// canonical order plus the mark bit.
template <typename P>
std::string dedup_key(const P& p) {
  const Partition* base;
  const std::vector<Color>* colors = nullptr;
  if constexpr (std::is_same_v<P, Partition>) {
    base = &p;
  } else {
    base = &p.base;
    colors = &p.colors;
  }
  const int m = base->points();
  std::string key;
  key.reserve(static_cast<size_t>(m) + 2);
  key.push_back(static_cast<char>(base->upper));
  key.push_back(static_cast<char>(base->lower));
  std::vector<int> blockOf(static_cast<size_t>(m) + 1, 0);
  for (size_t b = 0; b < base->blocks.size(); ++b)
    for (int x : base->blocks[b]) blockOf[static_cast<size_t>(x)] = static_cast<int>(b);
  for (int x = 1; x <= m; ++x) {
    int v = blockOf[static_cast<size_t>(x)] << 1;
    if (colors && (*colors)[static_cast<size_t>(x - 1)] == Color::White) v |= 1;
    key.push_back(static_cast<char>(v + 1));
  }
  return key;
}

template <typename P>
std::vector<P> closure_impl(const std::vector<P>& generators, int maxPoints) {
  if (maxPoints > guarded_limit(8)) throw SizeLimitError("closure limited to 8 points");

  std::vector<P> elems;
  std::unordered_set<std::string> keys;

  auto push = [&](const P& p) {
    int total;
    if constexpr (std::is_same_v<P, Partition>)
      total = p.points();
    else
      total = p.base.points();
    if (total > maxPoints) return;
    if (keys.insert(dedup_key(p)).second) elems.push_back(p);
  };

  push(identity_like<P>(1));
  for (const auto& g : generators) push(g);

  auto upper_of = [](const P& p) {
    if constexpr (std::is_same_v<P, Partition>)
      return p.upper;
    else
      return p.base.upper;
  };
  auto lower_of = [](const P& p) {
    if constexpr (std::is_same_v<P, Partition>)
      return p.lower;
    else
      return p.base.lower;
  };

  // elements indexed by insertion order; byUpper/byLower bucket the
  // composable partners. Element i is paired against every j <= i when
  // it is processed, so each pair runs exactly once in both roles.
  std::vector<std::vector<size_t>> byUpper(static_cast<size_t>(maxPoints) + 1);
  std::vector<std::vector<size_t>> byLower(static_cast<size_t>(maxPoints) + 1);

  for (size_t cur = 0; cur < elems.size(); ++cur) {
    const P self = elems[cur];  // copy: elems may grow
    const int selfUpper = upper_of(self);
    const int selfLower = lower_of(self);
    byUpper[static_cast<size_t>(selfUpper)].push_back(cur);
    byLower[static_cast<size_t>(selfLower)].push_back(cur);

    push(involute(self));
    if (selfUpper >= 1) push(rotate(self));

    const int selfPoints = selfUpper + selfLower;
    for (size_t j = 0; j <= cur; ++j) {
      const P other = elems[j];
      if (selfPoints + upper_of(other) + lower_of(other) <= maxPoints) {
        push(tensor(self, other));
        push(tensor(other, self));
      }
    }
    for (size_t j : byUpper[static_cast<size_t>(selfLower)]) {
      if (j > cur) continue;
      auto r = compose(self, elems[j]);
      if (!r.zero) push(*r.partition);
    }
    for (size_t j : byLower[static_cast<size_t>(selfUpper)]) {
      if (j > cur) continue;
      auto r = compose(elems[j], self);
      if (!r.zero) push(*r.partition);
    }
  }

  std::sort(elems.begin(), elems.end(),
            [](const P& a, const P& b) { return encode(a) < encode(b); });
  return elems;
}

}  // namespace

std::vector<Partition> closure(const std::vector<Partition>& generators, int maxPoints) {
  return closure_impl(generators, maxPoints);
}

std::vector<BulletedPartition> closure(const std::vector<BulletedPartition>& generators,
                                       int maxPoints) {
  return closure_impl(generators, maxPoints);
}

CategoryComparison category_equal(const std::vector<CategoryId>& sideA,
                                  const std::vector<CategoryId>& sideB, int maxPoints) {
  if (maxPoints > guarded_limit(10)) throw SizeLimitError("category comparison limited to 10 points");
  if (sideA.empty() || sideB.empty()) throw std::invalid_argument("empty category list");

  auto memberSet = [](const std::vector<CategoryId>& cats, int k, int l) {
    std::set<std::string> keys;
    for (const AnyPartition& p : enumerate(cats.front(), k, l)) {
      bool inAll = true;
      for (size_t i = 1; i < cats.size() && inAll; ++i) inAll = member(cats[i], p);
      if (inAll) keys.insert(encode(p));
    }
    return keys;
  };

  CategoryComparison out;
  for (int total = 0; total <= maxPoints; ++total) {
    for (int k = 0; k <= total; ++k) {
      const int l = total - k;
      const auto setA = memberSet(sideA, k, l);
      const auto setB = memberSet(sideB, k, l);
      if (setA == setB) continue;
      out.equal = false;
      CategoryCounterexample ce;
      ce.k = k;
      ce.l = l;
      for (const auto& key : setA)
        if (!setB.count(key)) {
          ce.encoded = key;
          ce.inFirst = true;
          break;
        }
      if (ce.encoded.empty())
        for (const auto& key : setB)
          if (!setA.count(key)) {
            ce.encoded = key;
            ce.inFirst = false;
            break;
          }
      out.counterexample = std::move(ce);
      return out;
    }
  }
  return out;
}

}  // namespace easyq
