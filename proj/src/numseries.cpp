#include "genwait/numseries.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

namespace genwait {

PrimeSieve PrimeSieve::up_to(std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("sieve bound must be >= 2");
  PrimeSieve s;
  s.bound = bound;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p * p <= bound; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  for (std::uint64_t p = 2; p <= bound; ++p)
    if (!composite[p]) s.primes.push_back(static_cast<std::uint32_t>(p));
  return s;
}

namespace {

constexpr double kPad = 0x1.0p-40;  // absorbs accumulated rounding per constant

struct Kahan {
  double sum = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Deterministic chunked sum of f(prime) over a prime range in descending
// index order (ascending term magnitude for decreasing f). Chunk partial
// sums are combined in fixed chunk order, so the result is bit-identical
// whether or not the chunk loop runs in parallel.
template <typename Fn>
double chunked_descending_sum(const std::vector<std::uint32_t>& primes, std::size_t from,
                              Fn&& f, bool parallel) {
  constexpr std::size_t kChunk = 4096;
  std::size_t count = primes.size() - from;
  std::size_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::size_t c = 0; c < nchunks; ++c) {
    // chunk 0 holds the largest primes (smallest terms)
    std::size_t hi = primes.size() - c * kChunk;
    std::size_t lo = hi > kChunk ? hi - kChunk : 0;
    if (lo < from) lo = from;
    Kahan k;
    for (std::size_t i = hi; i-- > lo;) k.add(f(primes[i]));
    partial[c] = k.sum;
  }
  Kahan total;
  for (double v : partial) total.add(v);
  return total.sum;
}

}  // namespace

Interval eta_constant(const PrimeSieve& sieve, bool parallel) {
  if (sieve.bound < 3) throw std::invalid_argument("eta needs prime bound >= 3");
  // skip p = 2
  std::size_t from = 1;
  double s = chunked_descending_sum(
      sieve.primes, from,
      [](std::uint32_t p) {
        double d = static_cast<double>(p) - 1.0;
        return 1.0 / (d * d);
      },
      parallel);
  double tail = 1.0 / (static_cast<double>(sieve.bound) - 2.0);
  Interval iv;
  iv.lower = 2.5 + s - kPad;
  iv.upper = 2.5 + s + tail + kPad;
  return iv;
}

Interval eta_constant(std::uint64_t prime_bound, bool parallel) {
  return eta_constant(PrimeSieve::up_to(prime_bound), parallel);
}

double abelian_product_probability(int d, int k, const PrimeSieve& sieve) {
  if (d < 1 || k < 0) throw std::invalid_argument("need d >= 1, k >= 0");
  if (k < d) return 0.0;
  double v = 1.0;
  for (std::uint32_t p : sieve.primes) {
    for (int i = 0; i < d; ++i) {
      double f = 1.0 - std::pow(static_cast<double>(p), static_cast<double>(i - k));
      if (f <= 0.0) return 0.0;
      v *= f;
    }
  }
  return v;
}

double abelian_product_probability(int d, int k, std::uint64_t prime_bound) {
  return abelian_product_probability(d, k, PrimeSieve::up_to(prime_bound));
}

double e_abelian(std::uint64_t n, int d) {
  PrimeSieve sieve = PrimeSieve::up_to(n);
  // sum_{k>K} (1 - P(k)) <= sum_{k>K} S(k) <= 2 S(K+1),
  // S(k) = sum_{p,i} p^{i-k} (each term at least halves as k grows)
  auto sum_majorant = [&](int k) {
    double s = 0;
    for (std::uint32_t p : sieve.primes)
      for (int i = 0; i < d; ++i) s += std::pow(static_cast<double>(p), static_cast<double>(i - k));
    return s;
  };
  int K = d + 4;
  while (2.0 * sum_majorant(K + 1) >= 0.5e-9) ++K;
  Kahan sum;
  for (int k = K; k >= 0; --k) sum.add(1.0 - abelian_product_probability(d, k, sieve));
  return sum.sum;
}

Interval sigma_limit(int d, std::uint64_t prime_bound, int k_extra, bool parallel) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  const PrimeSieve sieve = PrimeSieve::up_to(prime_bound);
  const double B = static_cast<double>(prime_bound);
  const int M = std::max(k_extra, 20);  // terms of the excess series
  const int J = M + 60;                 // exponent cutoff inside each term

  // zhat[j] = prod_{p<=B} (1 - p^{-j}),  2 <= j <= J
  std::vector<double> zhat(J + 1, 1.0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int j = 2; j <= J; ++j) {
    double v = 1.0;
    for (std::uint32_t p : sieve.primes) {
      double t = std::pow(static_cast<double>(p), -static_cast<double>(j));
      v *= (1.0 - t);
      if (t < 1e-300) break;  // remaining factors are exactly 1 in doubles
    }
    zhat[j] = v;
  }
  // multiplicative rounding slack for the zhat products and their suffixes
  const double relpad = static_cast<double>(sieve.primes.size() + J) * 4e-16;

  // The excess constant is 1 + sum_{m>=1} (1 - Z_m),
  // Z_m = prod_{j>m} prod_{all p} (1 - p^{-j}).
  // Bounds per m: the computed core prod_{j=m+1}^{J} zhat[j] overstates Z_m
  // (omitted factors are < 1); the understatement is controlled by
  //   T1 = sum_{p<=B, j>J} p^{-j}  and  T2(m) = sum_{p>B, j>m} p^{-j}.
  const double T1 = 2.0 * std::pow(2.0, -static_cast<double>(J)) *
                    (1.0 + 2.0 / (static_cast<double>(J) - 1.0));
  auto T2 = [&](int m) { return 2.0 * std::pow(B, -static_cast<double>(m)) / m; };

  std::vector<double> core(M + 1, 1.0);
  {
    // suffix products: core[m] = prod_{j=m+1}^{J} zhat[j]
    std::vector<double> suffix(J + 2, 1.0);
    for (int j = J; j >= 2; --j) suffix[j] = suffix[j + 1] * zhat[j];
    for (int m = 1; m <= M; ++m) core[m] = suffix[m + 1];
  }

  Kahan lo_sum, hi_sum;
  for (int m = M; m >= 1; --m) {
    double z_hi = core[m] * (1.0 + relpad);
    if (z_hi > 1.0) z_hi = 1.0;
    double z_lo = core[m] * (1.0 - T1 - T2(m) - relpad);
    lo_sum.add(1.0 - z_hi);
    hi_sum.add(1.0 - z_lo);
  }
  // tail over m > M: 1 - Z_m <= sum_{all p, j>m} p^{-j} <= 2*2^{-m}(1+2/m),
  // geometric with ratio <= 1/2
  double tail_m = 4.0 * std::pow(2.0, -static_cast<double>(M + 1)) *
                  (1.0 + 2.0 / static_cast<double>(M + 1));

  Interval iv;
  iv.lower = static_cast<double>(d) + 1.0 + lo_sum.sum - kPad;
  iv.upper = static_cast<double>(d) + 1.0 + hi_sum.sum + tail_m + kPad;
  return iv;
}

double gd_product_probability(int d, int k, const PrimeSieve& sieve) {
  if (d < 1 || k < 0) throw std::invalid_argument("need d >= 1, k >= 0");
  double v = 1.0 - std::pow(2.0, -static_cast<double>(k));
  if (v <= 0.0) return 0.0;
  for (std::uint32_t p : sieve.primes) {
    if (p == 2) continue;
    for (int i = 1; i <= d; ++i) {
      double f = 1.0 - std::pow(static_cast<double>(p), static_cast<double>(i - k));
      if (f <= 0.0) return 0.0;
      v *= f;
    }
  }
  return v;
}

double gd_product_probability(int d, int k, std::uint64_t prime_bound) {
  return gd_product_probability(d, k, PrimeSieve::up_to(prime_bound));
}

}  // namespace genwait
