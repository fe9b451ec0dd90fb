#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace genwait {

// Fixed-universe bit set over element ids {0..n-1}. Used for subgroup
// membership sets in the lattice machinery.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::uint32_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  std::uint32_t universe() const { return n_; }

  void insert(std::uint32_t x) { w_[x >> 6] |= 1ull << (x & 63); }
  bool contains(std::uint32_t x) const { return (w_[x >> 6] >> (x & 63)) & 1; }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  ElementSet intersect(const ElementSet& o) const {
    ElementSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  ElementSet unite(const ElementSet& o) const {
    ElementSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const ElementSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Total order: the set containing the smallest element of the symmetric
  // difference compares smaller (lexicographic on sorted member lists of
  // equal-cardinality sets).
  bool canonical_less(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t diff = w_[i] ^ o.w_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (w_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0x243f6a8885a308d3ull ^ n_;
    for (std::uint64_t w : w_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(w));
        fn(static_cast<std::uint32_t>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> v;
    v.reserve(count());
    for_each([&](std::uint32_t x) { v.push_back(x); });
    return v;
  }

private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace genwait
