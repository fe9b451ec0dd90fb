#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "genwait/element_set.hpp"
#include "genwait/group.hpp"

namespace genwait {

using ElemId = std::uint16_t;

// Canonical element table of a small group: elements in lexicographic image
// order (so id 0 is the identity), with multiplication, inverse and
// per-ambient-generator conjugation tables.
class ElemTable {
public:
  static ElemTable build(const Group& g, std::size_t cap);

  std::uint32_t size() const { return n_; }
  const Perm& elem(ElemId i) const { return elems_[i]; }
  ElemId id_of(const Perm& p) const;
  ElemId mul(ElemId a, ElemId b) const { return mult_[std::size_t(a) * n_ + b]; }
  ElemId inv(ElemId a) const { return inv_[a]; }

  // Subgroup generated by `gens`, as an id set.
  ElementSet closure(const std::vector<ElemId>& gens) const;

  // { g^-1 x g : x in s } where g is the id of an ambient generator.
  ElementSet conjugate(const ElementSet& s, ElemId g) const;

  const std::vector<ElemId>& ambient_gen_ids() const { return gen_ids_; }

private:
  std::uint32_t n_ = 0;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, ElemId, PermHash> index_;
  std::vector<ElemId> mult_;
  std::vector<ElemId> inv_;
  std::vector<ElemId> gen_ids_;
};

struct SubgroupNode {
  ElementSet members;
  std::uint32_t order = 0;
  bool normal = false;
  std::vector<ElemId> gens;  // some generating set, not necessarily minimal
};

struct LatticeOptions {
  std::uint32_t cap = 500;   // maximum ambient order for exact enumeration
  bool parallel = true;      // OpenMP join-closure frontier
};

// Full subgroup lattice of a small group. Nodes are sorted by (order,
// canonical member set), so node 0 is the trivial subgroup and the last
// node is the whole group; the layout is independent of thread scheduling.
class SubgroupLattice {
public:
  static SubgroupLattice enumerate(const Group& g, const LatticeOptions& opt = {});

  const Group& group() const { return group_; }
  const ElemTable& table() const { return *table_; }
  std::shared_ptr<const ElemTable> table_ptr() const { return table_; }

  std::size_t size() const { return nodes_.size(); }
  const SubgroupNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  bool leq(std::size_t h, std::size_t k) const {
    return nodes_[h].members.subset_of(nodes_[k].members);
  }
  // Strict supersets of h, ascending node ids.
  const std::vector<std::uint32_t>& supersets(std::size_t h) const { return up_[h]; }

  std::size_t find(const ElementSet& members) const;  // throws if absent

  std::size_t join(std::size_t h, std::size_t k) const;
  std::size_t intersect(std::size_t h, std::size_t k) const;

  // Largest normal subgroup of the ambient group contained in h
  // (intersection of the conjugates of h).
  std::size_t core(std::size_t h) const;

  std::vector<std::size_t> minimal_normal_subgroups() const;
  std::size_t socle() const;
  std::vector<std::size_t> maximal_subgroups() const;

  bool is_abelian(std::size_t h) const;
  bool is_cyclic(std::size_t h) const;

  // Permutation representation of G/N on the right cosets of N,
  // with the natural projection map.
  struct Quotient {
    Group group = Group::trivial(1);
    Perm project(const Perm& p) const;        // element of G -> coset permutation
    Perm project_id(ElemId id) const;
    std::uint32_t index = 0;                  // [G : N]
   private:
    friend class SubgroupLattice;
    std::shared_ptr<const ElemTable> table_;
    std::vector<std::uint32_t> coset_of_;     // element id -> coset index
    std::vector<ElemId> coset_rep_;           // coset index -> representative id
  };
  Quotient quotient(std::size_t normal_node) const;

private:
  Group group_ = Group::trivial(1);
  std::shared_ptr<const ElemTable> table_;
  std::vector<SubgroupNode> nodes_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index_;
  std::vector<std::vector<ElemId>> conj_maps_;  // per ambient generator: id -> id

  void finalize();
};

// Moebius function values mu(H, G) relative to the top of a lattice.
class MoebiusTable {
public:
  static MoebiusTable compute(const SubgroupLattice& l);
  std::int64_t at(std::size_t node) const { return mu_[node]; }
  std::size_t size() const { return mu_.size(); }

private:
  std::vector<std::int64_t> mu_;
};

}  // namespace genwait
