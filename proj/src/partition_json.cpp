#include "easyq/partition_json.hpp"

#include <json.hpp>

#include "easyq/errors.hpp"

namespace easyq {

namespace {

using json = nlohmann::json;

json base_json(const Partition& p) {
  json j;
  j["k"] = p.upper;
  j["l"] = p.lower;
  j["blocks"] = p.blocks;
  return j;
}

json colors_json(const std::vector<Color>& colors) {
  json j = json::object();
  for (size_t i = 0; i < colors.size(); ++i)
    j[std::to_string(i + 1)] = colors[i] == Color::Black ? "b" : "w";
  return j;
}

}  // namespace

std::string serialize(const Partition& p) { return base_json(p).dump(); }

std::string serialize(const BulletedPartition& p) {
  json j = base_json(p.base);
  j["colors"] = colors_json(p.colors);
  return j.dump();
}

std::string serialize(const ProductPartition& p) {
  json j = base_json(p.base);
  j["blockTags"] = p.tags;
  if (p.colors) j["colors"] = colors_json(*p.colors);
  return j.dump();
}

std::string serialize(const AnyPartition& p) {
  return std::visit([](const auto& v) { return serialize(v); }, p);
}

AnyPartition parse_partition(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    const int k = j.at("k").get<int>();
    const int l = j.at("l").get<int>();
    const auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    Partition base(k, l, blocks);

    std::optional<std::vector<Color>> colors;
    if (j.contains("colors")) {
      std::vector<Color> cs(static_cast<size_t>(base.points()), Color::Black);
      std::vector<char> seen(static_cast<size_t>(base.points()), 0);
      for (const auto& [key, val] : j.at("colors").items()) {
        const int pt = std::stoi(key);
        if (pt < 1 || pt > base.points()) throw ParseError("color key out of range: " + key);
        const std::string v = val.get<std::string>();
        if (v != "b" && v != "w") throw ParseError("color must be \"b\" or \"w\"");
        cs[static_cast<size_t>(pt - 1)] = v == "b" ? Color::Black : Color::White;
        seen[static_cast<size_t>(pt - 1)] = 1;
      }
      for (char s : seen)
        if (!s) throw ParseError("color map must cover every point");
      colors = std::move(cs);
    }

    if (j.contains("blockTags")) {
      auto tags = j.at("blockTags").get<std::vector<int>>();
      return AnyPartition(ProductPartition(std::move(base), std::move(tags), std::move(colors)));
    }
    if (colors) return AnyPartition(canonicalize(BulletedPartition(std::move(base), std::move(*colors))));
    return AnyPartition(std::move(base));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace easyq
