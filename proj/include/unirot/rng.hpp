#pragma once

#include <cstdint>
#include <random>

#include "unirot/checked.hpp"

namespace unirot {

/// Deterministic 64-bit generator. Drawing helpers reduce the raw stream by
/// modulus, so a given seed yields the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish index in [0, n); n must be positive.
  std::size_t index(std::size_t n) {
    if (n == 0) throw ValidationError("Rng::index needs a positive bound");
    return static_cast<std::size_t>(next() % n);
  }

  /// Value in [lo, hi], inclusive.
  i64 range(i64 lo, i64 hi) {
    if (lo > hi) throw ValidationError("Rng::range needs lo <= hi");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<i64>(next() % span);
  }

  bool coin() { return (next() & 1u) != 0; }
  int sign_coin() { return coin() ? 1 : -1; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace unirot
