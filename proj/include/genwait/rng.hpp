#pragma once

#include <cstdint>

namespace genwait {

// Counter-based pseudo-random stream. A (seed, stream) pair fully determines
// the output sequence, so independent streams can be handed to concurrent
// workers without coordination.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^
                 mix(stream + 0xd1b54a32d192ed03ull))) {}

  std::uint64_t next_u64() { return mix(key_ ^ mix(counter_++)); }

  // Uniform on {0..n-1}, unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t t = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next_u64();
      if (r <= UINT64_MAX - t) return r % n;
    }
  }

  // Uniform on [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace genwait
