#include "genwait/group.hpp"

#include <algorithm>

#include "genwait/errors.hpp"

namespace genwait {

Group Group::trivial(Point degree) {
  Group g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

Group::Group(std::vector<Perm> generators, Point degree) {
  degree_ = degree;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  input_gens_ = std::move(generators);
  for (const Perm& g : input_gens_)
    if (!g.is_identity()) add_strong_gen(g);
  close();
}

void Group::add_strong_gen(const Perm& g) {
  // g belongs to every level whose base-point prefix it fixes. If it fixes
  // all current base points, open a new level at its smallest moved point.
  std::size_t j = 0;
  while (j < levels_.size() && g(levels_[j].base_point) == levels_[j].base_point) ++j;
  if (j == levels_.size()) {
    Level lv;
    lv.base_point = g.min_moved();
    levels_.push_back(std::move(lv));
  }
  for (std::size_t t = 0; t <= j; ++t) levels_[t].gens.push_back(g);
}

void Group::update_orbit(std::size_t lvl) {
  Level& L = levels_[lvl];
  L.orbit.clear();
  L.reps.clear();
  L.slot_of.assign(degree_, -1);
  L.orbit.push_back(L.base_point);
  L.reps.push_back(Perm::identity(degree_));
  L.slot_of[L.base_point] = 0;
  for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
    Point pt = L.orbit[qi];
    for (const Perm& s : L.gens) {
      Point img = s(pt);
      if (L.slot_of[img] < 0) {
        L.slot_of[img] = static_cast<std::int32_t>(L.orbit.size());
        L.orbit.push_back(img);
        L.reps.push_back(L.reps[qi].then(s));
      }
    }
  }
}

std::pair<Perm, std::size_t> Group::sift(Perm g, std::size_t from) const {
  for (std::size_t t = from; t < levels_.size(); ++t) {
    const Level& L = levels_[t];
    Point img = g(L.base_point);
    std::int32_t slot = L.slot_of[img];
    if (slot < 0) return {std::move(g), t};
    g = g.then(L.reps[slot].inverse());
  }
  return {std::move(g), levels_.size()};
}

// Deterministic Schreier-Sims. Works from the deepest level upward; a level
// is complete when all its Schreier generators sift to the identity through
// the levels below it. Insertions jump processing back down to the level
// that received the new strong generator.
void Group::close() {
  if (levels_.empty()) {
    order_ = 1;
    return;
  }
  std::size_t i = levels_.size() - 1;
  for (;;) {
    update_orbit(i);
    bool inserted = false;
    Level& L = levels_[i];
    for (std::size_t slot = 0; slot < L.orbit.size() && !inserted; ++slot) {
      for (const Perm& s : L.gens) {
        Point img = s(L.orbit[slot]);
        Perm schreier = L.reps[slot].then(s).then(L.reps[L.slot_of[img]].inverse());
        auto [h, j] = sift(std::move(schreier), i + 1);
        if (!h.is_identity()) {
          add_strong_gen(h);
          i = j;  // a brand-new level lands exactly at j == old levels_.size()
          inserted = true;
          break;
        }
      }
    }
    if (!inserted) {
      if (i == 0) break;
      --i;
    }
  }
  recompute_order();
}

void Group::recompute_order() {
  order_ = 1;
  for (const Level& L : levels_) order_ *= static_cast<unsigned>(L.orbit.size());
}

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  auto [residue, lvl] = sift(p, 0);
  (void)lvl;
  return residue.is_identity();
}

std::vector<Perm> Group::elements(std::size_t cap) const {
  if (order_ > cap)
    throw CapExceeded("group order " + order_.str() + " exceeds enumeration cap " +
                      std::to_string(cap));
  std::vector<Perm> result = transversal_products();
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Perm> Group::transversal_products() const {
  std::vector<Perm> result{Perm::identity(degree_)};
  for (std::size_t t = levels_.size(); t-- > 0;) {
    std::vector<Perm> next;
    next.reserve(result.size() * levels_[t].reps.size());
    for (const Perm& h : result)
      for (const Perm& u : levels_[t].reps) next.push_back(h.then(u));
    result = std::move(next);
  }
  return result;
}

Perm Group::uniform(RandomStream& rng) const {
  Perm g = Perm::identity(degree_);
  for (std::size_t t = levels_.size(); t-- > 0;) {
    const Level& L = levels_[t];
    g = g.then(L.reps[rng.below(L.reps.size())]);
  }
  return g;
}

Group Group::extended(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in extension");
  if (contains(p)) return *this;
  Group g = *this;
  g.input_gens_.push_back(p);
  g.add_strong_gen(p);
  g.close();
  return g;
}

std::vector<Point> Group::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const Level& L : levels_) b.push_back(L.base_point);
  return b;
}

std::vector<std::size_t> Group::orbit_sizes() const {
  std::vector<std::size_t> s;
  s.reserve(levels_.size());
  for (const Level& L : levels_) s.push_back(L.orbit.size());
  return s;
}

}  // namespace genwait
