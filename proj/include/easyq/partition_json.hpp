#pragma once

#include <string>

#include "easyq/partition.hpp"

namespace easyq {

/// Canonical JSON: {"blocks":[[...],...],"k":..,"l":..} plus "colors"
/// (point id -> "b"/"w") and "blockTags" when the decoration is present.
/// Keys are sorted; optional fields are omitted when absent.
std::string serialize(const Partition& p);
std::string serialize(const BulletedPartition& p);
std::string serialize(const ProductPartition& p);
std::string serialize(const AnyPartition& p);

/// Inverse of serialize; throws ParseError (with position information for
/// malformed JSON) on bad input.
AnyPartition parse_partition(const std::string& text);

}  // namespace easyq
