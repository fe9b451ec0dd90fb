#include <doctest.h>

#include <cmath>

#include "genwait/groupspec.hpp"
#include "genwait/numseries.hpp"
#include "genwait/probgen.hpp"

using namespace genwait;

TEST_CASE("prime sieve") {
  PrimeSieve s = PrimeSieve::up_to(10);
  CHECK(s.primes == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(PrimeSieve::up_to(2).primes == std::vector<std::uint32_t>{2});
  CHECK_THROWS_AS(PrimeSieve::up_to(1), std::invalid_argument);
}

TEST_CASE("sieve matches trial division up to 10^4") {
  PrimeSieve s = PrimeSieve::up_to(10000);
  auto is_prime = [](std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  std::vector<std::uint32_t> trial;
  for (std::uint32_t n = 2; n <= 10000; ++n)
    if (is_prime(n)) trial.push_back(n);
  CHECK(s.primes == trial);
  CHECK(s.primes.size() == 1229);
}

TEST_CASE("prime count at 10^6") {
  CHECK(PrimeSieve::up_to(1000000).primes.size() == 78498);
}

TEST_CASE("eta interval") {
  {
    Interval iv = eta_constant(3);
    CHECK(iv.lower == doctest::Approx(2.75).epsilon(1e-9));
    CHECK(iv.upper == doctest::Approx(3.75).epsilon(1e-9));
  }
  {
    Interval iv = eta_constant(1000000);
    CHECK(iv.contains(2.875065));
    CHECK(iv.width() < 2e-6);
    CHECK(iv.upper < 3.0);
  }
  CHECK(eta_constant(11).upper < 3.0);
  CHECK(eta_constant(100).upper < 3.0);
  // monotone lower ends
  CHECK(eta_constant(100000).lower <= eta_constant(1000000).lower);
  CHECK_THROWS_AS(eta_constant(2), std::invalid_argument);
}

TEST_CASE("eta serial and parallel agree bit-for-bit") {
  PrimeSieve s = PrimeSieve::up_to(1000000);
  Interval a = eta_constant(s, false), b = eta_constant(s, true);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
}

TEST_CASE("abelian product probability") {
  CHECK(abelian_product_probability(1, 1, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(abelian_product_probability(2, 1, 100) == 0.0);
  CHECK(abelian_product_probability(3, 2, 100) == 0.0);
  CHECK(abelian_product_probability(2, 2, 100) > 0.0);
}

TEST_CASE("abelian product matches the exact lattice probability") {
  // E(2,2) x E(3,2) is the rank-2 product over the primes {2,3}
  SubgroupLattice L =
      SubgroupLattice::enumerate(GroupSpec::parse("E(2,2)*E(3,2)").build(), {720, true});
  MoebiusTable M = MoebiusTable::compute(L);
  GenPolynomial P = hall_polynomial(L, M);
  for (int k = 0; k <= 6; ++k) {
    double exact = static_cast<double>(P.eval(static_cast<unsigned>(k)));
    CHECK(std::fabs(abelian_product_probability(2, k, 3) - exact) < 1e-12);
  }
}

TEST_CASE("e_abelian") {
  CHECK(std::fabs(e_abelian(2, 1) - 2.0) < 1e-9);
  {
    SubgroupLattice L = SubgroupLattice::enumerate(GroupSpec::parse("C6").build(), {720, true});
    MoebiusTable M = MoebiusTable::compute(L);
    double exact = static_cast<double>(expected_exact(L, M));
    CHECK(std::fabs(e_abelian(3, 1) - exact) < 1e-9);
  }
  {
    SubgroupLattice L = SubgroupLattice::enumerate(GroupSpec::parse("C30").build(), {720, true});
    MoebiusTable M = MoebiusTable::compute(L);
    double exact = static_cast<double>(expected_exact(L, M));
    CHECK(std::fabs(e_abelian(5, 1) - exact) < 1e-9);
  }
  // strictly increasing in the prime bound
  double prev = 0;
  for (std::uint64_t n : {2ull, 10ull, 100ull, 1000ull, 10000ull}) {
    double v = e_abelian(n, 1);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("sigma limit interval") {
  Interval i1 = sigma_limit(1, 1000000, 60);
  Interval i2 = sigma_limit(2, 1000000, 60);
  Interval i3 = sigma_limit(3, 1000000, 60);
  CHECK(i1.width() < 1e-3);
  // the excess over d is the same constant for every rank
  for (auto [d, iv] : {std::pair{1, i1}, {2, i2}, {3, i3}}) {
    CHECK(iv.lower - d <= 2.11846 + 1e-3);
    CHECK(iv.upper - d >= 2.11846 - 1e-3);
  }
  Interval s1{i1.lower - 1, i1.upper - 1}, s2{i2.lower - 2, i2.upper - 2},
      s3{i3.lower - 3, i3.upper - 3};
  CHECK(s1.intersects(s2));
  CHECK(s2.intersects(s3));
  CHECK(s1.intersects(s3));
  // smaller bound: wider interval containing the same constant
  Interval coarse = sigma_limit(1, 10000, 60);
  CHECK(coarse.width() >= i1.width());
  CHECK(coarse.lower <= 1 + 2.1184566);
  CHECK(coarse.upper >= 1 + 2.1184565);
}

TEST_CASE("sigma serial and parallel agree bit-for-bit") {
  Interval a = sigma_limit(1, 100000, 40, false);
  Interval b = sigma_limit(1, 100000, 40, true);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
}

TEST_CASE("gd product probability") {
  // d=1, k=2, primes {3,5}: (3/4)(2/3)(4/5) = 2/5
  CHECK(gd_product_probability(1, 2, 5) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(gd_product_probability(1, 0, 100) == 0.0);
  CHECK(gd_product_probability(2, 2, 100) == 0.0);  // k = d includes a zero factor

  // matches the exact lattice values for the two-prime rank-1 case
  SubgroupLattice L =
      SubgroupLattice::enumerate(GroupSpec::parse("GD(1;3,5)").build(), {720, true});
  MoebiusTable M = MoebiusTable::compute(L);
  GenPolynomial P = hall_polynomial(L, M);
  for (int k = 0; k <= 6; ++k) {
    double exact = static_cast<double>(P.eval(static_cast<unsigned>(k)));
    CHECK(std::fabs(gd_product_probability(1, k, 5) - exact) < 1e-12);
  }
}

TEST_CASE("gd product at k=d+1 decays with the prime bound") {
  double prev = 1.0;
  for (std::uint64_t B : {100ull, 1000ull, 10000ull, 100000ull}) {
    double v = gd_product_probability(1, 2, B);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("gd product at k=d+2 stabilizes") {
  double a = gd_product_probability(1, 3, 100000);
  double b = gd_product_probability(1, 3, 1000000);
  CHECK(std::fabs(a - b) < 5e-5);
  CHECK(b > 0.7);  // bounded away from zero

  // successive refinements shrink geometrically
  double v2 = gd_product_probability(1, 3, 100);
  double v3 = gd_product_probability(1, 3, 1000);
  double v4 = gd_product_probability(1, 3, 10000);
  double v5 = gd_product_probability(1, 3, 100000);
  CHECK(std::fabs(v4 - v3) < std::fabs(v3 - v2));
  CHECK(std::fabs(v5 - v4) < std::fabs(v4 - v3));
}

TEST_CASE("cyclic squarefree case matches the exact lattice probability") {
  SubgroupLattice L = SubgroupLattice::enumerate(GroupSpec::parse("C6").build(), {720, true});
  MoebiusTable M = MoebiusTable::compute(L);
  GenPolynomial P = hall_polynomial(L, M);
  for (int k = 0; k <= 6; ++k) {
    double exact = static_cast<double>(P.eval(static_cast<unsigned>(k)));
    CHECK(std::fabs(abelian_product_probability(1, k, 3) - exact) < 1e-12);
  }
}
