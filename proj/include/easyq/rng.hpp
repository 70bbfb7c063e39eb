#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace easyq {

/// splitmix64; deterministic across platforms, cheap to fork per sample.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 fork(std::uint64_t stream) {
    SplitMix64 child(next() ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    child.next();
    return child;
  }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// uniform integer in [0, n)
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  /// standard normal via Box-Muller
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
};

}  // namespace easyq
