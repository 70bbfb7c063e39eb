#include "easyq/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "easyq/errors.hpp"

namespace easyq {

namespace {

int env_max_points() {
  if (const char* s = std::getenv("EASYQ_MAX_POINTS")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 0;
}

}  // namespace

int guarded_limit(int dflt) {
  const int v = env_max_points();
  return v > 0 ? v : dflt;
}

int max_points_plain() { return guarded_limit(16); }

int max_points_decorated() { return guarded_limit(12); }

void visit_set_partitions(int m, const std::function<bool(const std::vector<std::vector<int>>&)>& cb) {
  std::vector<std::vector<int>> blocks;
  if (m == 0) {
    cb(blocks);
    return;
  }
  // restricted growth: point i joins an existing block or opens a new one
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i > m) {
      if (!cb(blocks)) stop = true;
      return;
    }
    for (size_t b = 0; b < blocks.size() && !stop; ++b) {
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    if (stop) return;
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
}

namespace {

using Blocks = std::vector<std::vector<int>>;

// Noncrossing partitions of 1..m by interval recursion: the block of the
// least live point is chosen leg by leg; the gap under each new leg and
// the tail after the last leg are partitioned independently.
void visit_noncrossing_linear(int m, CategoryId::Tag sizeRule,
                              const std::function<bool(const Blocks&)>& cb) {
  Blocks blocks;
  std::vector<std::pair<int, int>> segs;  // pending nonempty segments
  bool stop = false;

  auto pushSeg = [&](int s, int e) -> bool {
    if (s > e) return false;
    segs.emplace_back(s, e);
    return true;
  };

  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    if (segs.empty()) {
      if (!cb(blocks)) stop = true;
      return;
    }
    const auto [s, e] = segs.back();
    segs.pop_back();
    blocks.push_back({s});

    auto grow = [&](auto&& growSelf, int last) -> void {
      if (stop) return;
      if (block_size_allowed(sizeRule, static_cast<int>(blocks.back().size()))) {
        const bool pushed = pushSeg(last + 1, e);
        self(self);
        if (pushed) segs.pop_back();
        if (stop) return;
      }
      for (int c = last + 1; c <= e && !stop; ++c) {
        const bool pushed = pushSeg(last + 1, c - 1);
        blocks.back().push_back(c);
        growSelf(growSelf, c);
        blocks.back().pop_back();
        if (pushed) segs.pop_back();
      }
    };
    grow(grow, s);

    blocks.pop_back();
    segs.emplace_back(s, e);
  };

  pushSeg(1, m);
  rec(rec);
}

// Position-space blocks -> point ids in the (k,l) diagram.
Partition relabel_from_positions(int k, int l, const Blocks& posBlocks) {
  Blocks out = posBlocks;
  for (auto& b : out)
    for (int& t : b) t = (t <= k) ? t : 2 * k + l + 1 - t;
  return Partition(k, l, std::move(out));
}

bool plain_sizes_ok(CategoryId::Tag t, const Partition& p) {
  for (const auto& b : p.blocks)
    if (!block_size_allowed(t, static_cast<int>(b.size()))) return false;
  return true;
}

void guard_points(const CategoryId& cat, int k, int l) {
  const bool decorated = cat.tag == CategoryId::Tag::Product || is_bulleted_tag(cat.tag);
  const int limit = decorated ? max_points_decorated() : max_points_plain();
  if (k + l > limit)
    throw SizeLimitError("enumeration limited to " + std::to_string(limit) + " points, got " +
                         std::to_string(k + l));
}

void visit_plain(CategoryId::Tag t, int k, int l, const std::function<bool(const Partition&)>& cb) {
  if (is_noncrossing_tag(t)) {
    visit_noncrossing_linear(k + l, t, [&](const Blocks& posBlocks) {
      return cb(relabel_from_positions(k, l, posBlocks));
    });
  } else {
    visit_set_partitions(k + l, [&](const Blocks& bs) {
      Partition p(k, l, bs);
      if (!plain_sizes_ok(t, p)) return true;
      return cb(p);
    });
  }
}

// All canonical bullet patterns of one block: least point black, the
// rest free.
bool visit_block_colorings(const std::vector<int>& block, std::vector<Color>& colors,
                           const std::function<bool()>& cb) {
  const int freeCount = static_cast<int>(block.size()) - 1;
  for (std::uint32_t mask = 0; mask < (1u << freeCount); ++mask) {
    colors[static_cast<size_t>(block[0] - 1)] = Color::Black;
    for (int i = 0; i < freeCount; ++i)
      colors[static_cast<size_t>(block[static_cast<size_t>(i) + 1] - 1)] =
          (mask >> i & 1) ? Color::White : Color::Black;
    if (!cb()) return false;
  }
  return true;
}

bool visit_colorings(const Partition& base, size_t fromBlock, std::vector<Color>& colors,
                     const std::function<bool()>& emit) {
  if (fromBlock == base.blocks.size()) return emit();
  return visit_block_colorings(base.blocks[fromBlock], colors, [&]() {
    return visit_colorings(base, fromBlock + 1, colors, emit);
  });
}

void visit_bulleted(CategoryId::Tag t, int k, int l,
                    const std::function<bool(const BulletedPartition&)>& cb) {
  const CategoryId::Tag baseTag = (t == CategoryId::Tag::Pbullet)    ? CategoryId::Tag::P
                                  : (t == CategoryId::Tag::NCbullet) ? CategoryId::Tag::NC
                                                                     : CategoryId::Tag::NCeven;
  bool stop = false;
  visit_plain(baseTag, k, l, [&](const Partition& base) {
    std::vector<Color> colors(static_cast<size_t>(base.points()), Color::Black);
    visit_colorings(base, 0, colors, [&]() {
      if (!cb(BulletedPartition(base, colors))) stop = true;
      return !stop;
    });
    return !stop;
  });
}

bool restriction_noncrossing(const ProductPartition& p, int tag) {
  for (size_t a = 0; a < p.base.blocks.size(); ++a) {
    if (p.tags[a] != tag) continue;
    for (size_t b = a + 1; b < p.base.blocks.size(); ++b) {
      if (p.tags[b] != tag) continue;
      if (blocks_cross(p.base, p.base.blocks[a], p.base.blocks[b])) return false;
    }
  }
  return true;
}

void visit_product(CategoryId::Tag c1, CategoryId::Tag c2, int k, int l,
                   const std::function<bool(const ProductPartition&)>& cb) {
  if (c1 == CategoryId::Tag::Product || c2 == CategoryId::Tag::Product)
    throw std::invalid_argument("product categories nest at most once");
  if (is_bulleted_tag(c2))
    throw UnsupportedImplError("marks are carried by the first factor; swap the factors");
  const bool bothNC = is_noncrossing_tag(c1) && is_noncrossing_tag(c2);
  const CategoryId::Tag ambient = bothNC ? CategoryId::Tag::NC : CategoryId::Tag::P;
  const bool anyBullets = is_bulleted_tag(c1);

  bool stop = false;
  visit_plain(ambient, k, l, [&](const Partition& base) {
    const size_t nb = base.blocks.size();
    std::vector<int> tags(nb, 1);
    auto assign = [&](auto&& self, size_t b) -> void {
      if (stop) return;
      if (b == nb) {
        ProductPartition pp(base, tags,
                            anyBullets ? std::optional<std::vector<Color>>(std::vector<Color>(
                                             static_cast<size_t>(base.points()), Color::Black))
                                       : std::nullopt);
        if (!valid_product(pp, c1, c2)) return;
        if (!anyBullets) {
          if (!cb(pp)) stop = true;
          return;
        }
        std::vector<size_t> colored;
        for (size_t i = 0; i < nb; ++i)
          if (tags[i] == 1) colored.push_back(i);
        auto colorRec = [&](auto&& colorSelf, size_t ci) -> void {
          if (stop) return;
          if (ci == colored.size()) {
            if (!cb(pp)) stop = true;
            return;
          }
          visit_block_colorings(base.blocks[colored[ci]], *pp.colors, [&]() {
            colorSelf(colorSelf, ci + 1);
            return !stop;
          });
        };
        colorRec(colorRec, 0);
        return;
      }
      for (int t : {1, 2}) {
        tags[b] = t;
        self(self, b + 1);
        if (stop) return;
      }
    };
    assign(assign, 0);
    return !stop;
  });
}

}  // namespace

bool valid_product(const ProductPartition& p, CategoryId::Tag c1, CategoryId::Tag c2) {
  for (size_t b = 0; b < p.base.blocks.size(); ++b) {
    const CategoryId::Tag factor = p.tags[b] == 1 ? c1 : c2;
    if (!block_size_allowed(factor, static_cast<int>(p.base.blocks[b].size()))) return false;
  }
  if (is_noncrossing_tag(c1) && is_noncrossing_tag(c2)) {
    if (!is_noncrossing(p.base)) return false;
  } else {
    if (is_noncrossing_tag(c1) && !restriction_noncrossing(p, 1)) return false;
    if (is_noncrossing_tag(c2) && !restriction_noncrossing(p, 2)) return false;
  }
  if (is_bulleted_tag(c2))
    throw UnsupportedImplError("marks are carried by the first factor; swap the factors");
  if (is_bulleted_tag(c1) != p.colors.has_value()) return false;
  if (p.colors) {
    // marks canonical per tag-1 block, black on tag-2 points
    for (size_t b = 0; b < p.base.blocks.size(); ++b) {
      const bool colored = p.tags[b] == 1;
      for (int x : p.base.blocks[b]) {
        const Color c = (*p.colors)[static_cast<size_t>(x - 1)];
        if (!colored && c != Color::Black) return false;
        if (colored && x == p.base.blocks[b].front() && c != Color::Black) return false;
      }
    }
  }
  return true;
}

bool member(const CategoryId& cat, const Partition& p) {
  if (cat.tag == CategoryId::Tag::Product || is_bulleted_tag(cat.tag)) return false;
  if (!plain_sizes_ok(cat.tag, p)) return false;
  if (is_noncrossing_tag(cat.tag) && !is_noncrossing(p)) return false;
  return true;
}

bool member(const CategoryId& cat, const BulletedPartition& p) {
  if (!is_bulleted_tag(cat.tag)) return false;
  const CategoryId::Tag baseTag = (cat.tag == CategoryId::Tag::Pbullet)    ? CategoryId::Tag::P
                                  : (cat.tag == CategoryId::Tag::NCbullet) ? CategoryId::Tag::NC
                                                                           : CategoryId::Tag::NCeven;
  return member(CategoryId(baseTag), p.base);
}

bool member(const CategoryId& cat, const ProductPartition& p) {
  if (cat.tag != CategoryId::Tag::Product) return false;
  return valid_product(p, cat.first, cat.second);
}

bool member(const CategoryId& cat, const AnyPartition& p) {
  return std::visit([&](const auto& v) { return member(cat, v); }, p);
}

void visit_category(const CategoryId& cat, int k, int l,
                    const std::function<bool(const AnyPartition&)>& cb) {
  guard_points(cat, k, l);
  if (cat.tag == CategoryId::Tag::Product) {
    visit_product(cat.first, cat.second, k, l,
                  [&](const ProductPartition& p) { return cb(AnyPartition(p)); });
  } else if (is_bulleted_tag(cat.tag)) {
    visit_bulleted(cat.tag, k, l, [&](const BulletedPartition& p) { return cb(AnyPartition(p)); });
  } else {
    visit_plain(cat.tag, k, l, [&](const Partition& p) { return cb(AnyPartition(p)); });
  }
}

std::vector<AnyPartition> enumerate(const CategoryId& cat, int k, int l) {
  std::vector<AnyPartition> out;
  visit_category(cat, k, l, [&](const AnyPartition& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const AnyPartition& a, const AnyPartition& b) { return encode(a) < encode(b); });
  return out;
}

std::vector<ProductPartition> product_enumerate(CategoryId::Tag c1, CategoryId::Tag c2, int k, int l) {
  if (k + l > guarded_limit(10))
    throw SizeLimitError("product enumeration limited to 10 points");
  std::vector<ProductPartition> out;
  visit_product(c1, c2, k, l, [&](const ProductPartition& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const ProductPartition& a, const ProductPartition& b) {
    return encode(a) < encode(b);
  });
  return out;
}

BigInt count(const CategoryId& cat, int k) {
  BigInt total = 0;
  visit_category(cat, 0, k, [&](const AnyPartition&) {
    ++total;
    return true;
  });
  return total;
}

}  // namespace easyq
