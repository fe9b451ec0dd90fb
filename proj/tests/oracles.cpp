#include "oracles.hpp"

#include <algorithm>

namespace genwait::oracle {

std::set<Perm> closure(const std::vector<Perm>& gens, Point degree) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Perm cur = std::move(todo.back());
    todo.pop_back();
    for (const Perm& g : gens) {
      Perm next = cur.then(g);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

std::set<std::set<Perm>> all_subgroups(const std::vector<Perm>& gens, Point degree) {
  std::vector<Perm> elems;
  for (const Perm& p : closure(gens, degree)) elems.push_back(p);
  std::set<std::set<Perm>> subs;
  auto add = [&](const std::vector<Perm>& s) {
    std::set<Perm> c = closure(s, degree);
    subs.insert(std::set<Perm>(c.begin(), c.end()));
  };
  add({});
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add({elems[i]});
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      add({elems[i], elems[j]});
      for (std::size_t k = j + 1; k < elems.size(); ++k) add({elems[i], elems[j], elems[k]});
    }
  }
  return subs;
}

Rational generating_fraction(const std::vector<Perm>& elements, unsigned k, Point degree) {
  const std::size_t n = elements.size();
  if (k == 0) return n == 1 ? 1 : 0;
  std::vector<std::size_t> idx(k, 0);
  BigInt generating = 0, total = 0;
  for (;;) {
    std::vector<Perm> tuple;
    for (std::size_t i : idx) tuple.push_back(elements[i]);
    if (closure(tuple, degree).size() == n) ++generating;
    ++total;
    std::size_t pos = 0;
    while (pos < k) {
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return Rational(generating, total);
}

}  // namespace genwait::oracle
