#pragma once

// Seeded sampling. All randomness in the library and CLI flows from a
// 64-bit seed through std::mt19937_64; bounded draws use rejection so the
// stream is identical across standard library implementations.

#include <cstdint>
#include <random>

namespace braidcoh {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (eng_() >> 63) != 0; }
  /// Seed for an independent sub-stream, e.g. one per sample index.
  std::uint64_t fork() { return eng_() ^ 0x6a09e667f3bcc909ULL; }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = eng_();
  while (x >= limit);
  return x % bound;
}

inline std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace braidcoh
