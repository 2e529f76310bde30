#pragma once

#include <cstdint>
#include <string_view>

namespace dyform::rng {

// SplitMix64: the fixed, documented generator behind every randomized
// suite. Independent streams are derived by hashing a stream name into the
// seed (FNV-1a), so adding a suite never perturbs another suite's samples.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via the fixed-point multiply; deterministic across
  // platforms (the tiny modulo bias is irrelevant here).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

inline SplitMix64 stream(std::uint64_t seed, std::string_view name) {
  return SplitMix64(seed ^ fnv1a(name));
}

}  // namespace dyform::rng
