#include "easyq/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "easyq/errors.hpp"

namespace easyq {

namespace {

void canonicalize_blocks(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

void validate_cover(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  int covered = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (int x : b) {
      if (x < 1 || x > m) throw std::invalid_argument("point id out of range");
      if (seen[static_cast<size_t>(x)]) throw std::invalid_argument("point in two blocks");
      seen[static_cast<size_t>(x)] = 1;
      ++covered;
    }
  }
  if (covered != m) throw std::invalid_argument("blocks do not cover all points");
}

}  // namespace

Partition::Partition(int k, int l, std::vector<std::vector<int>> bs)
    : upper(k), lower(l), blocks(std::move(bs)) {
  if (k < 0 || l < 0) throw std::invalid_argument("negative point count");
  validate_cover(k + l, blocks);
  canonicalize_blocks(blocks);
}

Partition Partition::identity(int k) {
  std::vector<std::vector<int>> bs;
  bs.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) bs.push_back({i, k + i});
  return Partition(k, k, std::move(bs));
}

std::vector<int> Partition::point_block_map() const {
  std::vector<int> map(static_cast<size_t>(points()) + 1, -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) map[static_cast<size_t>(x)] = static_cast<int>(b);
  return map;
}

bool is_noncrossing(const Partition& p) {
  const int m = p.points();
  if (m == 0) return true;
  const auto map = p.point_block_map();
  std::vector<int> owner(static_cast<size_t>(m) + 1, -1);
  for (int id = 1; id <= m; ++id) owner[static_cast<size_t>(circular_position(p, id))] = map[static_cast<size_t>(id)];

  std::vector<int> seen(p.blocks.size(), 0);
  std::vector<int> stack;
  for (int pos = 1; pos <= m; ++pos) {
    const int b = owner[static_cast<size_t>(pos)];
    if (seen[static_cast<size_t>(b)] == 0) {
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      return false;
    }
    ++seen[static_cast<size_t>(b)];
    if (seen[static_cast<size_t>(b)] == static_cast<int>(p.blocks[static_cast<size_t>(b)].size()))
      stack.pop_back();
  }
  return true;
}

bool blocks_cross(const Partition& p, const std::vector<int>& a, const std::vector<int>& b) {
  // Merge by circular position and count label switches; two blocks
  // interleave iff the merged word switches at least three times.
  std::vector<std::pair<int, int>> pos;  // (position, label)
  pos.reserve(a.size() + b.size());
  for (int x : a) pos.emplace_back(circular_position(p, x), 0);
  for (int x : b) pos.emplace_back(circular_position(p, x), 1);
  std::sort(pos.begin(), pos.end());
  int switches = 0;
  for (size_t i = 1; i < pos.size(); ++i)
    if (pos[i].second != pos[i - 1].second) ++switches;
  return switches >= 3;
}

BulletedPartition::BulletedPartition(Partition b, std::vector<Color> cs)
    : base(std::move(b)), colors(std::move(cs)) {
  if (colors.size() != static_cast<size_t>(base.points()))
    throw std::invalid_argument("color map must cover every point");
}

BulletedPartition canonicalize(const BulletedPartition& bp) {
  BulletedPartition out = bp;
  for (const auto& block : out.base.blocks) {
    const int least = block.front();
    if (out.colors[static_cast<size_t>(least - 1)] == Color::White)
      for (int x : block) out.colors[static_cast<size_t>(x - 1)] = flipped(out.colors[static_cast<size_t>(x - 1)]);
  }
  return out;
}

ProductPartition::ProductPartition(Partition b, std::vector<int> ts,
                                   std::optional<std::vector<Color>> cs)
    : base(std::move(b)), tags(std::move(ts)), colors(std::move(cs)) {
  if (tags.size() != base.blocks.size())
    throw std::invalid_argument("one tag per block required");
  for (int t : tags)
    if (t != 1 && t != 2) throw std::invalid_argument("block tags must be 1 or 2");
  if (colors && colors->size() != static_cast<size_t>(base.points()))
    throw std::invalid_argument("color map must cover every point");
}

CategoryId CategoryId::product(Tag c1, Tag c2) {
  if (c1 == Tag::Product || c2 == Tag::Product)
    throw std::invalid_argument("product categories nest at most once");
  CategoryId cat(Tag::Product);
  cat.first = c1;
  cat.second = c2;
  return cat;
}

bool is_bulleted_tag(CategoryId::Tag t) {
  using Tag = CategoryId::Tag;
  return t == Tag::Pbullet || t == Tag::NCbullet || t == Tag::NCbulletEven;
}

bool is_noncrossing_tag(CategoryId::Tag t) {
  using Tag = CategoryId::Tag;
  switch (t) {
    case Tag::NC:
    case Tag::NC2:
    case Tag::NC12:
    case Tag::NCeven:
    case Tag::NCbullet:
    case Tag::NCbulletEven:
      return true;
    default:
      return false;
  }
}

bool block_size_allowed(CategoryId::Tag t, int size) {
  using Tag = CategoryId::Tag;
  switch (t) {
    case Tag::P2:
    case Tag::NC2:
      return size == 2;
    case Tag::P12:
    case Tag::NC12:
      return size <= 2;
    case Tag::Peven:
    case Tag::NCeven:
    case Tag::NCbulletEven:
      return size % 2 == 0;
    default:
      return true;
  }
}

namespace {

const std::pair<CategoryId::Tag, const char*> kTagNames[] = {
    {CategoryId::Tag::P, "p"},
    {CategoryId::Tag::NC, "nc"},
    {CategoryId::Tag::P2, "p2"},
    {CategoryId::Tag::NC2, "nc2"},
    {CategoryId::Tag::P12, "p12"},
    {CategoryId::Tag::NC12, "nc12"},
    {CategoryId::Tag::Peven, "p-even"},
    {CategoryId::Tag::NCeven, "nc-even"},
    {CategoryId::Tag::Pbullet, "p-bullet"},
    {CategoryId::Tag::NCbullet, "nc-bullet"},
    {CategoryId::Tag::NCbulletEven, "nc-bullet-even"},
};

std::string tag_name(CategoryId::Tag t) {
  for (const auto& [tag, name] : kTagNames)
    if (tag == t) return name;
  return "?";
}

CategoryId::Tag parse_tag(const std::string& s) {
  for (const auto& [tag, name] : kTagNames)
    if (s == name) return tag;
  throw ParseError("unknown category: " + s);
}

}  // namespace

std::string category_name(const CategoryId& cat) {
  if (cat.tag == CategoryId::Tag::Product)
    return tag_name(cat.first) + "*" + tag_name(cat.second);
  return tag_name(cat.tag);
}

CategoryId parse_category(const std::string& name) {
  const auto star = name.find('*');
  if (star != std::string::npos)
    return CategoryId::product(parse_tag(name.substr(0, star)), parse_tag(name.substr(star + 1)));
  return CategoryId(parse_tag(name));
}

int points_of(const AnyPartition& p) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Partition>)
      return v.points();
    else
      return v.base.points();
  }, p);
}

namespace {

void append_blocks(std::string& out, const Partition& p) {
  out += std::to_string(p.upper);
  out += ',';
  out += std::to_string(p.lower);
  out += ';';
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out += '|';
    for (size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.blocks[b][i]);
    }
  }
}

void append_colors(std::string& out, const std::vector<Color>& colors) {
  out += ';';
  for (Color c : colors) out += (c == Color::Black ? 'b' : 'w');
}

}  // namespace

std::string encode(const Partition& p) {
  std::string out;
  append_blocks(out, p);
  return out;
}

std::string encode(const BulletedPartition& p) {
  std::string out;
  append_blocks(out, p.base);
  append_colors(out, p.colors);
  return out;
}

std::string encode(const ProductPartition& p) {
  std::string out;
  append_blocks(out, p.base);
  out += ';';
  for (int t : p.tags) out += static_cast<char>('0' + t);
  if (p.colors) append_colors(out, *p.colors);
  return out;
}

std::string encode(const AnyPartition& p) {
  return std::visit([](const auto& v) { return encode(v); }, p);
}

}  // namespace easyq
