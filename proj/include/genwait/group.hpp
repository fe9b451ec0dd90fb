#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "genwait/perm.hpp"
#include "genwait/rng.hpp"

namespace genwait {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group with a base and strong generating set, built by the
// deterministic Schreier-Sims algorithm. Immutable after construction;
// safe to share across threads.
class Group {
public:
  // Trivial group on `degree` points.
  static Group trivial(Point degree);

  // Builds the group generated by `generators` on {0..degree-1}.
  // All generators must have the given degree; the list may be empty.
  Group(std::vector<Perm> generators, Point degree);

  Point degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  // Exact membership test by sifting through the stabilizer chain.
  bool contains(const Perm& p) const;

  // All elements, deduplicated, in lexicographic image order.
  // Throws CapExceeded if order() > cap.
  std::vector<Perm> elements(std::size_t cap = 10000) const;

  // Exactly uniform random element: one transversal representative drawn
  // uniformly and independently at each level, then multiplied out.
  Perm uniform(RandomStream& rng) const;

  // Group generated by this group's generators together with p.
  // Returns *this unchanged (same chain) if p is already a member.
  Group extended(const Perm& p) const;

  const std::vector<Perm>& generators() const { return input_gens_; }

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

  // Every product of one transversal representative per level, without
  // deduplication. Equals elements() as a set iff the chain is correct.
  std::vector<Perm> transversal_products() const;

private:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;            // strong generators fixing all earlier base points
    std::vector<Point> orbit;          // discovery order, orbit[0] == base_point
    std::vector<Perm> reps;            // reps[i] maps base_point to orbit[i]
    std::vector<std::int32_t> slot_of; // point -> orbit slot, -1 if outside
  };

  Group() = default;

  void add_strong_gen(const Perm& g);          // files g into every level it stabilizes
  void update_orbit(std::size_t lvl);
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void close();
  void recompute_order();

  Point degree_ = 0;
  std::vector<Perm> input_gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace genwait
