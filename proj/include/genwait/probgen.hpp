#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "genwait/lattice.hpp"
#include "genwait/rng.hpp"
#include "genwait/structure.hpp"

namespace genwait {

using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& r, unsigned k);
Rational rational_from_double(double x);  // exact dyadic value

// P_G(k) as a signed sum of k-th powers of exact ratios |H|/|G|,
// aggregated over subgroups with equal ratio.
struct GenPolynomial {
  struct Term {
    BigInt coeff;    // summed Moebius values
    Rational ratio;  // |H|/|G| in lowest terms
  };
  std::vector<Term> terms;  // ratio descending; leading term is 1 * 1^k

  Rational eval(unsigned k) const;
};

GenPolynomial hall_polynomial(const SubgroupLattice& l, const MoebiusTable& mu);

// (number of generating k-tuples) / |G|^k by direct enumeration.
// Requires |G|^k <= 10^7.
Rational p_gen_bruteforce(const Group& g, unsigned k);

// e(G) in closed form: sum over proper subgroups of -mu(H,G) * |G|/(|G|-|H|).
Rational expected_exact(const SubgroupLattice& l, const MoebiusTable& mu);

// Partial sum of (1 - P_G(k)) for k <= K, with a certified geometric tail
// bound; the exact expectation lies in [value, value + tail].
struct TruncatedSeries {
  Rational value;
  Rational tail;
};
TruncatedSeries expected_series_truncated(const SubgroupLattice& l, const MoebiusTable& mu,
                                          unsigned K);

// Number of uniform draws until the drawn elements generate g.
int tau_sample(const Group& g, RandomStream& rng);

struct MonteCarloEstimate {
  double mean = 0;
  std::optional<double> stderr_;  // absent when trials == 1
  long long trials = 0;
  std::uint64_t seed = 0;
  std::map<int, long long> histogram;
  long long overflow = 0;  // samples beyond tau_cap (bucketed, flags a failure)
  int tau_cap = 0;
};

// Mean/stderr over independent tau samples. Per-trial random streams are
// derived from (seed, trial index), so the result is bit-identical for a
// fixed (seed, trials) regardless of worker count.
MonteCarloEstimate montecarlo_e(const Group& g, long long trials, std::uint64_t seed,
                                int workers, int d_hint = -1);
MonteCarloEstimate montecarlo_e_serial(const Group& g, long long trials, std::uint64_t seed,
                                       int d_hint = -1);

// 1 - P_G(k) <= sum_n m_n / n^k, verified in exact arithmetic for k = 0..k_max.
struct TailInequalityRow {
  unsigned k;
  Rational lhs, rhs;
  bool ok;
};
std::vector<TailInequalityRow> maximal_tail_inequality(const GenPolynomial& p,
                                                       const MaximalTable& t, unsigned k_max);

// Closed-form geometric sums over k >= d+2 of the classified maximal counts.
Rational mu_p_value(const MaximalTable& t, int d, std::uint32_t p);
Rational mu_star_value(const MaximalTable& t, int d);

}  // namespace genwait
