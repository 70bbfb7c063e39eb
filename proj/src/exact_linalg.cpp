#include "easyq/exact_linalg.hpp"

#include <utility>

namespace easyq {

int exact_rank(BigIntMatrix m) {
  using boost::multiprecision::cpp_int;
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();

  cpp_int prevPivot = 1;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);

    const cpp_int p = m[row][col];
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * p - m[i][col] * m[row][j]) / prevPivot;
      m[i][col] = 0;
    }
    prevPivot = p;
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace easyq
