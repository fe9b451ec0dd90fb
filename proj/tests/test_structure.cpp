#include <doctest.h>

#include "genwait/groupspec.hpp"
#include "genwait/errors.hpp"
#include "genwait/structure.hpp"

using namespace genwait;

namespace {
SubgroupLattice lat(const std::string& s) {
  LatticeOptions opt;
  opt.cap = 720;
  return SubgroupLattice::enumerate(GroupSpec::parse(s).build(), opt);
}
}  // namespace

TEST_CASE("sylow subgroups") {
  SubgroupLattice c6 = lat("C6");
  CHECK(c6.node(sylow_subgroup(c6, 3)).order == 3);
  CHECK(c6.node(sylow_subgroup(c6, 5)).order == 1);  // p does not divide |G|

  SubgroupLattice s4 = lat("S4");
  CHECK(s4.node(sylow_subgroup(s4, 2)).order == 8);

  SubgroupLattice a5 = lat("A5");
  std::size_t p2 = sylow_subgroup(a5, 2);
  CHECK(a5.node(p2).order == 4);
  CHECK_FALSE(a5.is_cyclic(p2));
}

TEST_CASE("sylow rank") {
  CHECK(sylow_rank(lat("S3"), 3) == 1);
  CHECK(sylow_rank(lat("S4"), 2) == 2);
  CHECK(sylow_rank(lat("E(3,2)*C2"), 3) == 2);
  CHECK(sylow_rank(lat("C8"), 2) == 1);
  CHECK(sylow_rank(lat("E(2,3)"), 2) == 3);
  CHECK(sylow_rank(lat("Q8"), 2) == 2);
  CHECK(sylow_rank(lat("S4"), 5) == 0);
}

TEST_CASE("frattini subgroup agrees with commutator-power closure") {
  for (const char* s : {"C8", "Q8", "E(3,2)", "D4", "E(2,3)", "C9"}) {
    SubgroupLattice L = lat(s);
    auto ps = prime_factors(static_cast<std::uint64_t>(L.group().order()));
    REQUIRE(ps.size() == 1);
    std::size_t p = sylow_subgroup(L, ps[0]);
    CHECK(frattini_of_p_group(L, p) == commutator_power_set(L, p, ps[0]));
  }
}

TEST_CASE("sylow rank equals brute-force minimal generating size") {
  for (const char* s : {"C8", "Q8", "E(3,2)", "D4", "E(2,3)"}) {
    SubgroupLattice L = lat(s);
    std::uint32_t p = prime_factors(static_cast<std::uint64_t>(L.group().order()))[0];
    CHECK(sylow_rank(L, p) == min_generators(L.group()));
  }
}

TEST_CASE("chief series") {
  {
    SubgroupLattice L = lat("C5");
    QuotientLattices Q(L);
    ChiefSeries cs = chief_series(Q);
    REQUIRE(cs.factors.size() == 1);
    CHECK(cs.factors[0].order == 5);
    CHECK(cs.factors[0].abelian);
    CHECK(cs.factors[0].complemented);  // top factor, trivial complement
  }
  {
    SubgroupLattice L = lat("S4");
    QuotientLattices Q(L);
    ChiefSeries cs = chief_series(Q);
    REQUIRE(cs.factors.size() == 3);
    CHECK(cs.factors[0].order == 4);
    CHECK(cs.factors[1].order == 3);
    CHECK(cs.factors[2].order == 2);
    for (const auto& f : cs.factors) {
      CHECK(f.abelian);
      CHECK(f.complemented);
    }
  }
  {
    SubgroupLattice L = lat("A5");
    QuotientLattices Q(L);
    ChiefSeries cs = chief_series(Q);
    REQUIRE(cs.factors.size() == 1);
    CHECK(cs.factors[0].order == 60);
    CHECK_FALSE(cs.factors[0].abelian);
  }
  {
    // product of factor orders = |G|
    SubgroupLattice L = lat("S5");
    QuotientLattices Q(L);
    ChiefSeries cs = chief_series(Q);
    std::uint64_t prod = 1;
    for (const auto& f : cs.factors) prod *= f.order;
    CHECK(prod == 120);
  }
}

TEST_CASE("complement detection") {
  {
    SubgroupLattice L = lat("C4");
    QuotientLattices Q(L);
    std::size_t c2 = SIZE_MAX;
    for (std::size_t i = 0; i < L.size(); ++i)
      if (L.node(i).order == 2) c2 = i;
    CHECK_FALSE(is_complemented(Q, L.bottom(), c2));
    CHECK(is_complemented(Q, c2, L.top()));  // G/K itself, complemented by K
  }
  {
    SubgroupLattice L = lat("E(2,2)");
    QuotientLattices Q(L);
    for (std::size_t i = 0; i < L.size(); ++i)
      if (L.node(i).order == 2) CHECK(is_complemented(Q, L.bottom(), i));
  }
  {
    SubgroupLattice L = lat("S4");
    QuotientLattices Q(L);
    std::size_t v4 = SIZE_MAX;
    for (std::size_t i = 0; i < L.size(); ++i)
      if (L.node(i).order == 4 && L.node(i).normal) v4 = i;
    CHECK(is_complemented(Q, L.bottom(), v4));
  }
}

TEST_CASE("generation profiles") {
  {
    SubgroupLattice L = lat("S4");
    QuotientLattices Q(L);
    GenerationProfile p = profile(Q);
    CHECK(p.alpha.at({2, 1}) == 1);
    CHECK(p.alpha.at({2, 2}) == 1);
    CHECK(p.alpha.at({3, 1}) == 1);
    CHECK(p.beta == 0);
    CHECK(p.sylow_rank.at(2) == 2);
    CHECK(p.sylow_rank.at(3) == 1);
    CHECK(p.max_sylow_rank == 2);
  }
  {
    SubgroupLattice L = lat("A5");
    QuotientLattices Q(L);
    GenerationProfile p = profile(Q);
    CHECK(p.alpha.empty());
    CHECK(p.beta == 1);
    CHECK(p.sylow_rank.at(2) == 2);
    CHECK(p.sylow_rank.at(3) == 1);
    CHECK(p.sylow_rank.at(5) == 1);
    CHECK(p.max_sylow_rank == 2);
  }
  {
    // only the top factor of the unique series 1 < C2 < C4 is complemented
    SubgroupLattice L = lat("C4");
    QuotientLattices Q(L);
    GenerationProfile p = profile(Q);
    CHECK(p.alpha_of(2) == 1);
    CHECK(p.beta == 0);
    CHECK(p.sylow_rank.at(2) == 1);
  }
  {
    SubgroupLattice L = lat("E(3,3)");
    QuotientLattices Q(L);
    GenerationProfile p = profile(Q);
    CHECK(p.alpha_of(3) == 3);
    CHECK(p.sylow_rank.at(3) == 3);
  }
}

TEST_CASE("profile is independent of the series tie-break") {
  for (const char* s : {"S4", "A5", "C12", "D6", "GD(1;3,5)", "E(2,2)*E(3,2)", "S5"}) {
    SubgroupLattice L = lat(s);
    QuotientLattices Q(L);
    GenerationProfile a = profile(Q, TieBreak::LeastFirst);
    GenerationProfile b = profile(Q, TieBreak::GreatestFirst);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
  }
}

TEST_CASE("maximal classification") {
  {
    SubgroupLattice L = lat("S4");
    QuotientLattices Q(L);
    MaximalTable t = classify_maximals(Q);
    CHECK(t.rows.at(2).m == 1);
    CHECK(t.rows.at(3).m == 3);
    CHECK(t.rows.at(4).m == 4);
    for (const auto& [n, row] : t.rows) {
      CHECK(row.type_a == row.m);
      CHECK(row.type_b == 0);
    }
  }
  {
    SubgroupLattice L = lat("A5");
    QuotientLattices Q(L);
    MaximalTable t = classify_maximals(Q);
    CHECK(t.rows.at(5).type_b == 5);
    CHECK(t.rows.at(6).type_b == 6);
    CHECK(t.rows.at(10).type_b == 10);
    CHECK(t.total() == 21);
  }
  {
    SubgroupLattice L = lat("C6");
    QuotientLattices Q(L);
    MaximalTable t = classify_maximals(Q);
    CHECK(t.rows.at(2).type_a == 1);
    CHECK(t.rows.at(3).type_a == 1);
    CHECK(t.total() == 2);
  }
}

TEST_CASE("index-2 maximal count is 2^alpha_{2,1} - 1") {
  // ties the maximal table to the complemented-factor count through the
  // abelianization; a sharp consistency check on both sides
  for (const char* s : {"C2", "C4", "C8", "C12", "C30", "E(2,2)", "E(2,3)", "S3", "S4", "D4",
                        "D6", "Q8", "A4", "GD(1;3,5)", "E(2,2)*C3", "S5",
                        "perm(8){(3 4 5)(6 8 7),(1 3 2 6)(4 5 8 7)}"}) {
    SubgroupLattice L = lat(s);
    QuotientLattices Q(L);
    GenerationProfile pr = profile(Q);
    MaximalTable t = classify_maximals(Q);
    long long m2 = t.rows.count(2) ? t.rows.at(2).m : 0;
    int a21 = 0;
    if (auto it = pr.alpha.find({2, 1}); it != pr.alpha.end()) a21 = it->second;
    CHECK(m2 == (1ll << a21) - 1);
  }
}

TEST_CASE("min_generators") {
  CHECK(min_generators(GroupSpec::parse("C7").build()) == 1);
  CHECK(min_generators(GroupSpec::parse("E(2,2)").build()) == 2);
  CHECK(min_generators(GroupSpec::parse("S4").build()) == 2);
  CHECK(min_generators(GroupSpec::parse("E(2,3)").build()) == 3);
  CHECK(min_generators(GroupSpec::parse("E(5,3)").build()) == 3);
  CHECK(min_generators(GroupSpec::parse("Q8").build()) == 2);
  CHECK(min_generators(Group::trivial(3)) == 0);
}

TEST_CASE("min_generators cap") {
  CHECK_THROWS_AS(min_generators(GroupSpec::parse("S5").build(), 100), CapExceeded);
}
