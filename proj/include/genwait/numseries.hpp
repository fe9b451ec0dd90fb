#pragma once

#include <cstdint>
#include <vector>

namespace genwait {

// Closed interval certified to contain the reported quantity.
struct Interval {
  double lower = 0;
  double upper = 0;
  bool contains(double x) const { return lower <= x && x <= upper; }
  double width() const { return upper - lower; }
  bool intersects(const Interval& o) const { return lower <= o.upper && o.lower <= upper; }
};

struct PrimeSieve {
  std::uint64_t bound = 0;
  std::vector<std::uint32_t> primes;  // ascending, exactly the primes <= bound
  static PrimeSieve up_to(std::uint64_t bound);
};

// 5/2 + sum over odd primes of 1/(p-1)^2, bracketed with the elementary
// tail majorant sum_{m>bound} 1/(m-1)^2 <= 1/(bound-2).
Interval eta_constant(const PrimeSieve& sieve, bool parallel = true);
Interval eta_constant(std::uint64_t prime_bound, bool parallel = true);

// prod_{p<=bound} prod_{i=0}^{d-1} (1 - p^{i-k}); 0 when any factor is <= 0
// (the probability vanishes for k < d).
double abelian_product_probability(int d, int k, const PrimeSieve& sieve);
double abelian_product_probability(int d, int k, std::uint64_t prime_bound);

// sum_{k>=0} (1 - abelian_product_probability(d, k, n)), truncated with a
// certified geometric tail below 1e-9.
double e_abelian(std::uint64_t n, int d);

// Interval around d + sigma, where sigma is the limit excess constant for
// products of elementary abelian groups (the value is rank-independent;
// the bracket is computed from truncated Euler products with certified
// tails in both the exponent and the primes).
Interval sigma_limit(int d, std::uint64_t prime_bound, int k_extra, bool parallel = true);

// (1 - 2^{-k}) * prod over odd primes p <= bound of
// (1 - p^{1-k}) ... (1 - p^{d-k}); 0 when any factor is <= 0.
double gd_product_probability(int d, int k, const PrimeSieve& sieve);
double gd_product_probability(int d, int k, std::uint64_t prime_bound);

}  // namespace genwait
