#include "genwait/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "genwait/errors.hpp"

namespace genwait {

ElemTable ElemTable::build(const Group& g, std::size_t cap) {
  ElemTable t;
  std::vector<Perm> elems = g.elements(cap);
  t.n_ = static_cast<std::uint32_t>(elems.size());
  t.elems_ = std::move(elems);
  t.index_.reserve(t.n_ * 2);
  for (std::uint32_t i = 0; i < t.n_; ++i) t.index_.emplace(t.elems_[i], static_cast<ElemId>(i));
  t.mult_.resize(std::size_t(t.n_) * t.n_);
  t.inv_.resize(t.n_);
  for (std::uint32_t a = 0; a < t.n_; ++a) {
    for (std::uint32_t b = 0; b < t.n_; ++b) {
      t.mult_[std::size_t(a) * t.n_ + b] = t.index_.at(t.elems_[a].then(t.elems_[b]));
    }
    t.inv_[a] = t.index_.at(t.elems_[a].inverse());
  }
  for (const Perm& gen : g.generators()) {
    if (gen.is_identity()) continue;
    t.gen_ids_.push_back(t.index_.at(gen));
  }
  return t;
}

ElemId ElemTable::id_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation is not a group element");
  return it->second;
}

ElementSet ElemTable::closure(const std::vector<ElemId>& gens) const {
  ElementSet set(n_);
  set.insert(0);
  std::vector<ElemId> stack{0};
  while (!stack.empty()) {
    ElemId x = stack.back();
    stack.pop_back();
    for (ElemId g : gens) {
      ElemId y = mul(x, g);
      if (!set.contains(y)) {
        set.insert(y);
        stack.push_back(y);
      }
    }
  }
  return set;
}

ElementSet ElemTable::conjugate(const ElementSet& s, ElemId g) const {
  ElementSet r(n_);
  ElemId gi = inv(g);
  s.for_each([&](std::uint32_t x) { r.insert(mul(mul(gi, static_cast<ElemId>(x)), g)); });
  return r;
}

namespace {

struct Candidate {
  ElementSet members;
  std::vector<ElemId> gens;
};

bool node_less(const SubgroupNode& a, const SubgroupNode& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.members.canonical_less(b.members);
}

}  // namespace

SubgroupLattice SubgroupLattice::enumerate(const Group& g, const LatticeOptions& opt) {
  if (opt.cap > 10000)
    throw std::invalid_argument("exact-mode cap exceeds the hard bound 10000");
  if (g.order() > opt.cap)
    throw CapExceeded("group order " + g.order().str() + " exceeds lattice cap " +
                      std::to_string(opt.cap) + "; use Monte Carlo mode");
  SubgroupLattice L;
  L.group_ = g;
  L.table_ = std::make_shared<const ElemTable>(ElemTable::build(g, opt.cap));
  const ElemTable& T = *L.table_;
  const std::uint32_t n = T.size();

  // Seed with all cyclic subgroups, then close under pairwise joins.
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index;
  std::vector<SubgroupNode> nodes;

  // Joins concatenate generator lists; reduce them greedily so closure
  // stays cheap as joins of joins accumulate.
  auto reduce_gens = [&T](const ElementSet& members, std::vector<ElemId>& gens) {
    if (gens.size() <= 2) return;
    std::vector<ElemId> small;
    ElementSet cur(T.size());
    cur.insert(0);
    bool done = false;
    members.for_each([&](std::uint32_t x) {
      if (done || cur.contains(x)) return;
      small.push_back(static_cast<ElemId>(x));
      cur = T.closure(small);
      if (cur == members) done = true;
    });
    gens = std::move(small);
  };

  auto add_node = [&](ElementSet members, std::vector<ElemId> gens) -> bool {
    auto it = index.find(members);
    if (it != index.end()) return false;
    reduce_gens(members, gens);
    SubgroupNode nd;
    nd.order = members.count();
    nd.members = std::move(members);
    nd.gens = std::move(gens);
    index.emplace(nd.members, static_cast<std::uint32_t>(nodes.size()));
    nodes.push_back(std::move(nd));
    return true;
  };

  {
    ElementSet triv(n);
    triv.insert(0);
    add_node(std::move(triv), {});
  }
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t x = 1; x < n; ++x) {
    ElementSet c = T.closure({static_cast<ElemId>(x)});
    if (add_node(std::move(c), {static_cast<ElemId>(x)}))
      frontier.push_back(static_cast<std::uint32_t>(nodes.size() - 1));
  }

  while (!frontier.empty()) {
    // Join every frontier node with every node of smaller index; the set of
    // results is independent of scheduling, and the batch is sorted before
    // insertion so node numbering is too.
    std::vector<Candidate> batch;
#pragma omp parallel if (opt.parallel)
    {
      std::vector<Candidate> local;
#pragma omp for schedule(dynamic, 1)
      for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
        std::uint32_t y = frontier[fi];
        for (std::uint32_t x = 0; x < y; ++x) {
          const SubgroupNode& A = nodes[x];
          const SubgroupNode& B = nodes[y];
          if (A.members.subset_of(B.members) || B.members.subset_of(A.members)) continue;
          std::vector<ElemId> gens = A.gens;
          gens.insert(gens.end(), B.gens.begin(), B.gens.end());
          ElementSet j = T.closure(gens);
          if (index.find(j) == index.end()) local.push_back({std::move(j), std::move(gens)});
        }
      }
#pragma omp critical
      batch.insert(batch.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    std::sort(batch.begin(), batch.end(), [](const Candidate& a, const Candidate& b) {
      std::uint32_t ca = a.members.count(), cb = b.members.count();
      if (ca != cb) return ca < cb;
      return a.members.canonical_less(b.members);
    });
    frontier.clear();
    for (Candidate& c : batch) {
      if (add_node(std::move(c.members), std::move(c.gens)))
        frontier.push_back(static_cast<std::uint32_t>(nodes.size() - 1));
    }
  }

  std::sort(nodes.begin(), nodes.end(), node_less);
  L.nodes_ = std::move(nodes);
  L.finalize();
  return L;
}

void SubgroupLattice::finalize() {
  const ElemTable& T = *table_;
  index_.clear();
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].members, i);

  conj_maps_.clear();
  for (ElemId g : T.ambient_gen_ids()) {
    std::vector<ElemId> cmap(T.size());
    ElemId gi = T.inv(g);
    for (std::uint32_t x = 0; x < T.size(); ++x)
      cmap[x] = T.mul(T.mul(gi, static_cast<ElemId>(x)), g);
    conj_maps_.push_back(std::move(cmap));
  }

  for (SubgroupNode& nd : nodes_) {
    nd.normal = true;
    for (const auto& cmap : conj_maps_) {
      ElementSet img(T.size());
      nd.members.for_each([&](std::uint32_t x) { img.insert(cmap[x]); });
      if (!(img == nd.members)) {
        nd.normal = false;
        break;
      }
    }
  }

  up_.assign(nodes_.size(), {});
  for (std::uint32_t h = 0; h < nodes_.size(); ++h) {
    for (std::uint32_t k = 0; k < nodes_.size(); ++k) {
      if (h == k) continue;
      if (nodes_[h].order <= nodes_[k].order && nodes_[h].members.subset_of(nodes_[k].members))
        up_[h].push_back(k);
    }
  }
}

std::size_t SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) throw std::logic_error("element set is not a subgroup node");
  return it->second;
}

std::size_t SubgroupLattice::join(std::size_t h, std::size_t k) const {
  if (leq(h, k)) return k;
  if (leq(k, h)) return h;
  std::vector<ElemId> gens = nodes_[h].gens;
  gens.insert(gens.end(), nodes_[k].gens.begin(), nodes_[k].gens.end());
  return find(table_->closure(gens));
}

std::size_t SubgroupLattice::intersect(std::size_t h, std::size_t k) const {
  return find(nodes_[h].members.intersect(nodes_[k].members));
}

std::size_t SubgroupLattice::core(std::size_t h) const {
  const ElemTable& T = *table_;
  std::vector<ElementSet> orbit{nodes_[h].members};
  std::unordered_map<ElementSet, bool, ElementSetHash> seen;
  seen.emplace(orbit[0], true);
  ElementSet inter = orbit[0];
  for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
    for (const auto& cmap : conj_maps_) {
      ElementSet img(T.size());
      orbit[qi].for_each([&](std::uint32_t x) { img.insert(cmap[x]); });
      if (!seen.count(img)) {
        seen.emplace(img, true);
        inter = inter.intersect(img);
        orbit.push_back(std::move(img));
      }
    }
  }
  return find(inter);
}

std::vector<std::size_t> SubgroupLattice::minimal_normal_subgroups() const {
  if (group_.is_trivial())
    throw std::invalid_argument("trivial group has no minimal normal subgroups");
  std::vector<std::size_t> normals;  // nontrivial normal nodes, including the top
  for (std::size_t i = 1; i < size(); ++i)
    if (nodes_[i].normal) normals.push_back(i);
  std::vector<std::size_t> out;
  for (std::size_t cand : normals) {
    bool minimal = true;
    for (std::size_t other : normals) {
      if (other != cand && leq(other, cand)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(cand);
  }
  return out;
}

std::size_t SubgroupLattice::socle() const {
  auto mins = minimal_normal_subgroups();
  std::size_t s = mins[0];
  for (std::size_t i = 1; i < mins.size(); ++i) s = join(s, mins[i]);
  return s;
}

std::vector<std::size_t> SubgroupLattice::maximal_subgroups() const {
  if (group_.is_trivial()) throw std::invalid_argument("trivial group has no maximal subgroups");
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < top(); ++h) {
    const auto& ups = up_[h];
    if (ups.size() == 1 && ups[0] == top()) out.push_back(h);
  }
  return out;
}

bool SubgroupLattice::is_abelian(std::size_t h) const {
  const ElemTable& T = *table_;
  auto ids = nodes_[h].members.members();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (T.mul(static_cast<ElemId>(ids[i]), static_cast<ElemId>(ids[j])) !=
          T.mul(static_cast<ElemId>(ids[j]), static_cast<ElemId>(ids[i])))
        return false;
  return true;
}

bool SubgroupLattice::is_cyclic(std::size_t h) const {
  const auto& nd = nodes_[h];
  bool cyclic = false;
  nd.members.for_each([&](std::uint32_t x) {
    if (!cyclic && table_->elem(static_cast<ElemId>(x)).element_order() == nd.order) cyclic = true;
  });
  return cyclic;
}

SubgroupLattice::Quotient SubgroupLattice::quotient(std::size_t normal_node) const {
  const SubgroupNode& N = nodes_[normal_node];
  if (!N.normal) throw std::invalid_argument("quotient by a non-normal subgroup");
  const ElemTable& T = *table_;
  const std::uint32_t n = T.size();

  Quotient q;
  q.table_ = table_;
  q.coset_of_.assign(n, UINT32_MAX);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (q.coset_of_[x] != UINT32_MAX) continue;
    std::uint32_t idx = static_cast<std::uint32_t>(q.coset_rep_.size());
    q.coset_rep_.push_back(static_cast<ElemId>(x));
    N.members.for_each([&](std::uint32_t m) {
      q.coset_of_[T.mul(static_cast<ElemId>(m), static_cast<ElemId>(x))] = idx;
    });
  }
  q.index = static_cast<std::uint32_t>(q.coset_rep_.size());

  std::vector<Perm> qgens;
  for (ElemId g : T.ambient_gen_ids()) qgens.push_back(q.project_id(g));
  q.group = Group(std::move(qgens), q.index);
  return q;
}

Perm SubgroupLattice::Quotient::project_id(ElemId id) const {
  std::vector<Point> im(coset_rep_.size());
  for (std::uint32_t c = 0; c < coset_rep_.size(); ++c)
    im[c] = coset_of_[table_->mul(coset_rep_[c], id)];
  return Perm(std::move(im));
}

Perm SubgroupLattice::Quotient::project(const Perm& p) const {
  return project_id(table_->id_of(p));
}

MoebiusTable MoebiusTable::compute(const SubgroupLattice& l) {
  MoebiusTable t;
  t.mu_.assign(l.size(), 0);
  // nodes are sorted by order, so iterating downward visits supersets first
  t.mu_[l.top()] = 1;
  for (std::size_t h = l.size() - 1; h-- > 0;) {
    std::int64_t s = 0;
    for (std::uint32_t k : l.supersets(h)) s += t.mu_[k];
    t.mu_[h] = -s;
  }
  return t;
}

}  // namespace genwait
