#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace easyq {

using BigIntMatrix = std::vector<std::vector<boost::multiprecision::cpp_int>>;

/// Exact rank by fraction-free (Bareiss) elimination.
int exact_rank(BigIntMatrix m);

}  // namespace easyq
