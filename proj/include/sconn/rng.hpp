#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sconn {

// Deterministic random source: std::mt19937_64 (output sequence fixed by the
// standard) plus hand-rolled bounded draws, so streams reproduce bit-for-bit
// across platforms and standard libraries. std::uniform_int_distribution is
// implementation-defined and must never touch this stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound) by masked rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t x = gen_() & mask;
      if (x < bound) return x;
    }
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sconn
