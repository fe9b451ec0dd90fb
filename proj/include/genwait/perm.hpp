#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace genwait {

using Point = std::uint32_t;

// Permutation of {0..n-1} stored as an image table.
// Composition is left-to-right: x^(a*b) = (x^a)^b.
class Perm {
public:
  Perm() = default;

  static Perm identity(Point n) {
    Perm p;
    p.im_.resize(n);
    for (Point i = 0; i < n; ++i) p.im_[i] = i;
    return p;
  }

  // Validates that `images` is a bijection on {0..n-1}.
  explicit Perm(std::vector<Point> images) : im_(std::move(images)) {
    std::vector<bool> seen(im_.size(), false);
    for (Point x : im_) {
      if (x >= im_.size() || seen[x])
        throw std::invalid_argument("permutation images are not a bijection");
      seen[x] = true;
    }
  }

  Point degree() const { return static_cast<Point>(im_.size()); }

  Point operator()(Point x) const { return im_[x]; }

  const std::vector<Point>& images() const { return im_; }

  // Apply *this first, then `next`.
  Perm then(const Perm& next) const {
    if (degree() != next.degree())
      throw std::invalid_argument("degree mismatch in composition");
    Perm r;
    r.im_.resize(im_.size());
    for (Point i = 0; i < degree(); ++i) r.im_[i] = next.im_[im_[i]];
    return r;
  }

  Perm operator*(const Perm& next) const { return then(next); }

  Perm inverse() const {
    Perm r;
    r.im_.resize(im_.size());
    for (Point i = 0; i < degree(); ++i) r.im_[im_[i]] = i;
    return r;
  }

  bool is_identity() const {
    for (Point i = 0; i < degree(); ++i)
      if (im_[i] != i) return false;
    return true;
  }

  // Smallest moved point; degree() if identity.
  Point min_moved() const {
    for (Point i = 0; i < degree(); ++i)
      if (im_[i] != i) return i;
    return degree();
  }

  bool operator==(const Perm& o) const { return im_ == o.im_; }
  auto operator<=>(const Perm& o) const { return im_ <=> o.im_; }

  // Nontrivial cycles, each rotated to start at its smallest point,
  // sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  // Order of the permutation (lcm of cycle lengths).
  std::uint64_t element_order() const;

  std::string to_string() const;  // 0-indexed cycle form, for diagnostics

private:
  std::vector<Point> im_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ p.degree();
    for (Point x : p.images()) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace genwait
