#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "easyq/partition.hpp"

namespace easyq {

using BigInt = boost::multiprecision::cpp_int;

/// Point-count guardrails; EASYQ_MAX_POINTS in the environment overrides
/// every default limit.
int guarded_limit(int dflt);
int max_points_plain();
int max_points_decorated();

/// Streams every set partition of {1..m}; stops early if the callback
/// returns false.
void visit_set_partitions(int m, const std::function<bool(const std::vector<std::vector<int>>&)>& cb);

/// Streams every member of cat(k,l) (decoration matching the category).
/// Order is unspecified; enumerate() sorts.
void visit_category(const CategoryId& cat, int k, int l,
                    const std::function<bool(const AnyPartition&)>& cb);

bool member(const CategoryId& cat, const Partition& p);
bool member(const CategoryId& cat, const BulletedPartition& p);
bool member(const CategoryId& cat, const ProductPartition& p);
bool member(const CategoryId& cat, const AnyPartition& p);

/// Structural + category validity for a two-colored partition.
bool valid_product(const ProductPartition& p, CategoryId::Tag c1, CategoryId::Tag c2);

/// Every member of cat(k,l) exactly once, canonical, sorted by encode().
std::vector<AnyPartition> enumerate(const CategoryId& cat, int k, int l);

/// Members of (c1 * c2)(k,l).
std::vector<ProductPartition> product_enumerate(CategoryId::Tag c1, CategoryId::Tag c2, int k, int l);

/// |cat(0,k)|.
BigInt count(const CategoryId& cat, int k);

}  // namespace easyq
