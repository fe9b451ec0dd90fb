#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "genwait/lattice.hpp"

namespace genwait {

// Memoized quotient lattices of one ambient lattice, keyed by the normal
// subgroup node. The quotient by the trivial subgroup is the ambient
// lattice itself (no regular-representation detour).
class QuotientLattices {
public:
  explicit QuotientLattices(const SubgroupLattice& ambient, const LatticeOptions& opt = {});

  const SubgroupLattice& mod(std::size_t normal_node);
  // Node of H/N inside mod(N); requires N <= H.
  std::size_t image_node(std::size_t normal_node, std::size_t h_node);

  const SubgroupLattice& ambient() const { return *ambient_; }

private:
  const SubgroupLattice* ambient_;
  LatticeOptions opt_;
  std::map<std::size_t, SubgroupLattice::Quotient> quots_;
  std::map<std::size_t, std::unique_ptr<SubgroupLattice>> lats_;
  void ensure(std::size_t normal_node);
};

struct ChiefFactor {
  std::uint32_t order = 0;
  bool abelian = false;
  std::uint32_t prime = 0;   // set iff abelian
  int exponent = 0;          // order == prime^exponent iff abelian
  bool complemented = false;
};

struct ChiefSeries {
  std::vector<std::size_t> chain;     // node ids, bottom .. top
  std::vector<ChiefFactor> factors;   // factors[i] = chain[i+1]/chain[i]
};

struct GenerationProfile {
  std::map<std::uint32_t, int> sylow_rank;              // p -> d_p, primes dividing |G|
  std::map<std::pair<std::uint32_t, int>, int> alpha;   // (p,t) -> complemented factors of order p^t
  std::map<std::uint32_t, int> alpha_p;                 // p -> sum over t
  int beta = 0;                                         // nonabelian chief factors
  int max_sylow_rank = 0;                               // max_p d_p

  int alpha_of(std::uint32_t p) const {
    auto it = alpha_p.find(p);
    return it == alpha_p.end() ? 0 : it->second;
  }
  int rank_of(std::uint32_t p) const {
    auto it = sylow_rank.find(p);
    return it == sylow_rank.end() ? 0 : it->second;
  }
};

struct MaximalRow {
  long long m = 0;       // maximal subgroups of this index
  long long type_a = 0;  // socle of G/core abelian
  long long type_b = 0;
};

struct MaximalTable {
  std::map<std::uint32_t, MaximalRow> rows;  // index n -> counts
  long long total() const {
    long long t = 0;
    for (const auto& [n, r] : rows) t += r.m;
    return t;
  }
};

// Node of one Sylow p-subgroup (the trivial node if p does not divide |G|).
std::size_t sylow_subgroup(const SubgroupLattice& l, std::uint32_t p);

// Minimal size of a generating set of a Sylow p-subgroup, computed as
// log_p [P : Phi(P)] with Phi(P) the intersection of P's maximal subgroups.
int sylow_rank(const SubgroupLattice& l, std::uint32_t p);

// Frattini subgroup of a p-group node, as an element set of the ambient
// table (for the P' P^p cross-check in tests).
ElementSet frattini_of_p_group(const SubgroupLattice& l, std::size_t p_node);
ElementSet commutator_power_set(const SubgroupLattice& l, std::size_t p_node, std::uint32_t p);

enum class TieBreak { LeastFirst, GreatestFirst };

// Maximal chain of normal subgroups; each factor is a minimal normal
// subgroup of the corresponding quotient. Complement flags are filled in.
ChiefSeries chief_series(QuotientLattices& q, TieBreak tb = TieBreak::LeastFirst);

// True iff the chief factor H/K has a complement in G/K.
bool is_complemented(QuotientLattices& q, std::size_t k_node, std::size_t h_node);

GenerationProfile profile(QuotientLattices& q, TieBreak tb = TieBreak::LeastFirst);

MaximalTable classify_maximals(QuotientLattices& q);

// Least k such that some k-tuple of elements generates g.
// First tuple slot runs over conjugacy class representatives only.
int min_generators(const Group& g, std::size_t cap = 2000);

std::vector<std::uint32_t> prime_factors(std::uint64_t n);  // distinct, ascending

}  // namespace genwait
