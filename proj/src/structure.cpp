#include "genwait/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "genwait/errors.hpp"

namespace genwait {

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

QuotientLattices::QuotientLattices(const SubgroupLattice& ambient, const LatticeOptions& opt)
    : ambient_(&ambient), opt_(opt) {}

void QuotientLattices::ensure(std::size_t normal_node) {
  if (normal_node == ambient_->bottom()) return;
  if (lats_.count(normal_node)) return;
  auto q = ambient_->quotient(normal_node);
  auto lat = std::make_unique<SubgroupLattice>(SubgroupLattice::enumerate(q.group, opt_));
  quots_.emplace(normal_node, std::move(q));
  lats_.emplace(normal_node, std::move(lat));
}

const SubgroupLattice& QuotientLattices::mod(std::size_t normal_node) {
  if (normal_node == ambient_->bottom()) return *ambient_;
  ensure(normal_node);
  return *lats_.at(normal_node);
}

std::size_t QuotientLattices::image_node(std::size_t normal_node, std::size_t h_node) {
  if (normal_node == ambient_->bottom()) return h_node;
  ensure(normal_node);
  const auto& q = quots_.at(normal_node);
  const SubgroupLattice& ql = *lats_.at(normal_node);
  ElementSet img(ql.table().size());
  ambient_->node(h_node).members.for_each([&](std::uint32_t x) {
    img.insert(ql.table().id_of(q.project_id(static_cast<ElemId>(x))));
  });
  return ql.find(img);
}

std::size_t sylow_subgroup(const SubgroupLattice& l, std::uint32_t p) {
  std::uint64_t order = static_cast<std::uint64_t>(l.group().order());
  std::uint32_t ppart = 1;
  while (order % p == 0) {
    ppart *= p;
    order /= p;
  }
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.node(i).order == ppart) return i;
  throw std::logic_error("no subgroup of Sylow order found");  // impossible in a full lattice
}

// Lattice of a subgroup node, built as a standalone group.
namespace {
SubgroupLattice sublattice(const SubgroupLattice& l, std::size_t node) {
  const auto& nd = l.node(node);
  std::vector<Perm> gens;
  for (ElemId g : nd.gens) gens.push_back(l.table().elem(g));
  Group sub(std::move(gens), l.group().degree());
  LatticeOptions opt;
  opt.cap = std::max<std::uint32_t>(nd.order, 1);
  opt.parallel = false;
  return SubgroupLattice::enumerate(sub, opt);
}
}  // namespace

ElementSet frattini_of_p_group(const SubgroupLattice& l, std::size_t p_node) {
  SubgroupLattice pl = sublattice(l, p_node);
  ElementSet phi = pl.node(pl.top()).members;
  for (std::size_t m : pl.maximal_subgroups()) phi = phi.intersect(pl.node(m).members);
  // translate back to ambient element ids
  ElementSet out(l.table().size());
  phi.for_each([&](std::uint32_t x) {
    out.insert(l.table().id_of(pl.table().elem(static_cast<ElemId>(x))));
  });
  return out;
}

ElementSet commutator_power_set(const SubgroupLattice& l, std::size_t p_node, std::uint32_t p) {
  const ElemTable& T = l.table();
  const auto& nd = l.node(p_node);
  auto ids = nd.members.members();
  std::vector<ElemId> gens;
  for (std::uint32_t a : ids) {
    ElemId pw = 0;
    for (std::uint32_t i = 0; i < p; ++i) pw = T.mul(pw, static_cast<ElemId>(a));
    gens.push_back(pw);
    for (std::uint32_t b : ids) {
      ElemId comm = T.mul(T.mul(T.inv(static_cast<ElemId>(a)), T.inv(static_cast<ElemId>(b))),
                          T.mul(static_cast<ElemId>(a), static_cast<ElemId>(b)));
      gens.push_back(comm);
    }
  }
  return T.closure(gens);
}

int sylow_rank(const SubgroupLattice& l, std::uint32_t p) {
  std::size_t pn = sylow_subgroup(l, p);
  std::uint32_t po = l.node(pn).order;
  if (po == 1) return 0;
  ElementSet phi = frattini_of_p_group(l, pn);
  std::uint32_t idx = po / phi.count();
  int rank = 0;
  while (idx > 1) {
    idx /= p;
    ++rank;
  }
  return rank;
}

namespace {

bool factor_abelian(const ElemTable& T, const ElementSet& upper, const ElementSet& lower) {
  auto ids = upper.members();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      ElemId a = static_cast<ElemId>(ids[i]), b = static_cast<ElemId>(ids[j]);
      ElemId comm = T.mul(T.mul(T.inv(a), T.inv(b)), T.mul(a, b));
      if (!lower.contains(comm)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_complemented(QuotientLattices& q, std::size_t k_node, std::size_t h_node) {
  const SubgroupLattice& amb = q.ambient();
  if (!amb.node(k_node).normal || !amb.node(h_node).normal || !amb.leq(k_node, h_node) ||
      k_node == h_node)
    throw std::invalid_argument("is_complemented requires normal K < H");
  const SubgroupLattice& ql = q.mod(k_node);
  std::size_t himg = q.image_node(k_node, h_node);
  std::uint32_t horder = ql.node(himg).order;
  std::uint32_t qorder = ql.node(ql.top()).order;
  std::uint32_t want = qorder / horder;
  for (std::size_t c = 0; c < ql.size(); ++c) {
    if (ql.node(c).order != want) continue;
    if (ql.node(c).members.intersect(ql.node(himg).members).count() == 1) return true;
  }
  return false;
}

ChiefSeries chief_series(QuotientLattices& q, TieBreak tb) {
  const SubgroupLattice& l = q.ambient();
  if (l.group().is_trivial()) throw std::invalid_argument("trivial group has no chief series");

  std::vector<std::size_t> normals;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.node(i).normal) normals.push_back(i);

  ChiefSeries out;
  out.chain.push_back(l.bottom());
  while (out.chain.back() != l.top()) {
    std::size_t cur = out.chain.back();
    // minimal normal subgroups of G/cur = minimal elements of
    // { normal N : cur < N } by the correspondence theorem
    std::vector<std::size_t> cands;
    for (std::size_t n : normals) {
      if (n == cur || !l.leq(cur, n)) continue;
      bool minimal = true;
      for (std::size_t m : normals) {
        if (m == cur || m == n || !l.leq(cur, m)) continue;
        if (l.leq(m, n)) {
          minimal = false;
          break;
        }
      }
      if (minimal) cands.push_back(n);
    }
    std::size_t pick = cands[0];
    for (std::size_t c : cands) {
      bool better;
      if (l.node(c).order != l.node(pick).order) {
        better = (tb == TieBreak::LeastFirst) ? l.node(c).order < l.node(pick).order
                                              : l.node(c).order > l.node(pick).order;
      } else {
        better = (tb == TieBreak::LeastFirst)
                     ? l.node(c).members.canonical_less(l.node(pick).members)
                     : l.node(pick).members.canonical_less(l.node(c).members);
      }
      if (better) pick = c;
    }
    out.chain.push_back(pick);
  }

  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
    std::size_t k = out.chain[i], h = out.chain[i + 1];
    ChiefFactor f;
    f.order = l.node(h).order / l.node(k).order;
    f.abelian = factor_abelian(l.table(), l.node(h).members, l.node(k).members);
    if (f.abelian) {
      auto ps = prime_factors(f.order);
      f.prime = ps[0];
      std::uint32_t o = f.order;
      while (o > 1) {
        o /= f.prime;
        ++f.exponent;
      }
    }
    f.complemented = is_complemented(q, k, h);
    out.factors.push_back(f);
  }
  return out;
}

GenerationProfile profile(QuotientLattices& q, TieBreak tb) {
  const SubgroupLattice& l = q.ambient();
  GenerationProfile pr;
  std::uint64_t order = static_cast<std::uint64_t>(l.group().order());
  for (std::uint32_t p : prime_factors(order)) {
    int r = sylow_rank(l, p);
    pr.sylow_rank[p] = r;
    pr.max_sylow_rank = std::max(pr.max_sylow_rank, r);
  }
  ChiefSeries cs = chief_series(q, tb);
  for (const ChiefFactor& f : cs.factors) {
    if (!f.abelian) {
      ++pr.beta;
    } else if (f.complemented) {
      ++pr.alpha[{f.prime, f.exponent}];
      ++pr.alpha_p[f.prime];
    }
  }
  return pr;
}

MaximalTable classify_maximals(QuotientLattices& q) {
  const SubgroupLattice& l = q.ambient();
  MaximalTable t;
  std::uint32_t gorder = l.node(l.top()).order;
  for (std::size_t m : l.maximal_subgroups()) {
    std::uint32_t n = gorder / l.node(m).order;
    std::size_t core = l.core(m);
    const SubgroupLattice& ql = q.mod(core);
    bool abelian_socle = ql.is_abelian(ql.socle());
    auto& row = t.rows[n];
    ++row.m;
    if (abelian_socle)
      ++row.type_a;
    else
      ++row.type_b;
  }
  return t;
}

int min_generators(const Group& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("group order " + g.order().str() + " exceeds generator-search cap " +
                      std::to_string(cap));
  if (g.is_trivial()) return 0;
  ElemTable T = ElemTable::build(g, cap);
  const std::uint32_t n = T.size();

  // conjugacy class representatives (orbits of conjugation by generators)
  std::vector<ElemId> reps;
  {
    std::vector<bool> seen(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (seen[x]) continue;
      reps.push_back(static_cast<ElemId>(x));
      std::vector<ElemId> stack{static_cast<ElemId>(x)};
      seen[x] = true;
      while (!stack.empty()) {
        ElemId y = stack.back();
        stack.pop_back();
        for (ElemId gen : T.ambient_gen_ids()) {
          ElemId z = T.mul(T.mul(T.inv(gen), y), gen);
          if (!seen[z]) {
            seen[z] = true;
            stack.push_back(z);
          }
        }
      }
    }
  }

  // depth-first tuple search; generation is conjugation-invariant, so the
  // first slot only needs class representatives
  std::vector<ElemId> tuple;
  auto search = [&](auto&& self, int remaining) -> bool {
    ElementSet cur = T.closure(tuple);
    if (cur.count() == n) return true;
    if (remaining == 0) return false;
    if (tuple.empty()) {
      for (ElemId r : reps) {
        if (r == 0) continue;
        tuple.push_back(r);
        if (self(self, remaining - 1)) return true;
        tuple.pop_back();
      }
      return false;
    }
    for (std::uint32_t x = 1; x < n; ++x) {
      if (cur.contains(x)) continue;  // adding a member changes nothing
      tuple.push_back(static_cast<ElemId>(x));
      if (self(self, remaining - 1)) return true;
      tuple.pop_back();
    }
    return false;
  };

  for (int k = 1;; ++k) {
    tuple.clear();
    if (search(search, k)) return k;
  }
}

}  // namespace genwait
