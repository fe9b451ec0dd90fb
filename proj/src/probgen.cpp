#include "genwait/probgen.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genwait/errors.hpp"

namespace genwait {

Rational rational_pow(const Rational& r, unsigned k) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(r), k), pow(denominator(r), k));
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  Rational r = 0;
  int sign = x < 0 ? -1 : 1;
  x = std::fabs(x);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, m in [0.5, 1)
  BigInt num = static_cast<std::uint64_t>(std::ldexp(m, 53));
  exp -= 53;
  if (exp >= 0) {
    num <<= exp;
    r = Rational(num);
  } else {
    BigInt den = BigInt(1) << (-exp);
    r = Rational(num, den);
  }
  return sign < 0 ? -r : r;
}

Rational GenPolynomial::eval(unsigned k) const {
  Rational s = 0;
  for (const Term& t : terms) s += Rational(t.coeff) * rational_pow(t.ratio, k);
  return s;
}

GenPolynomial hall_polynomial(const SubgroupLattice& l, const MoebiusTable& mu) {
  const BigInt gorder = l.group().order();
  std::map<std::uint32_t, BigInt> by_order;  // |H| -> summed mu
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (mu.at(i) == 0) continue;
    by_order[l.node(i).order] += mu.at(i);
  }
  GenPolynomial p;
  for (auto it = by_order.rbegin(); it != by_order.rend(); ++it) {
    if (it->second == 0) continue;
    p.terms.push_back({it->second, Rational(BigInt(it->first), gorder)});
  }
  return p;
}

Rational p_gen_bruteforce(const Group& g, unsigned k) {
  const BigInt order = g.order();
  if (order > 10000) throw CapExceeded("group too large for element-table enumeration");
  BigInt total = 1;
  for (unsigned i = 0; i < k; ++i) {
    total *= order;
    if (total > 10000000) throw CapExceeded("|G|^k exceeds brute-force bound 10^7");
  }
  if (g.is_trivial()) return 1;  // the empty product generates the trivial group
  if (k == 0) return 0;

  ElemTable t = ElemTable::build(g, 10000);
  const std::uint32_t n = t.size();
  std::vector<ElemId> tuple(k, 0);
  BigInt generating = 0;
  for (;;) {
    if (t.closure(tuple).count() == n) ++generating;
    std::size_t pos = 0;
    while (pos < k) {
      if (++tuple[pos] < n) break;
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return Rational(generating, total);
}

Rational expected_exact(const SubgroupLattice& l, const MoebiusTable& mu) {
  if (l.group().is_trivial())
    throw std::invalid_argument("expectation series requires a nontrivial group");
  const BigInt gorder = l.group().order();
  Rational e = 0;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {  // proper subgroups only
    if (mu.at(i) == 0) continue;
    e += Rational(BigInt(-mu.at(i)) * gorder, gorder - l.node(i).order);
  }
  return e;
}

TruncatedSeries expected_series_truncated(const SubgroupLattice& l, const MoebiusTable& mu,
                                          unsigned K) {
  if (l.group().is_trivial())
    throw std::invalid_argument("expectation series requires a nontrivial group");
  GenPolynomial p = hall_polynomial(l, mu);
  TruncatedSeries out;
  out.value = 0;
  for (unsigned k = 0; k <= K; ++k) out.value += 1 - p.eval(k);
  out.tail = 0;
  const BigInt gorder = l.group().order();
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    std::int64_t m = mu.at(i);
    if (m == 0) continue;
    Rational r(BigInt(l.node(i).order), gorder);
    Rational am = m < 0 ? Rational(-m) : Rational(m);
    out.tail += am * rational_pow(r, K + 1) / (1 - r);
  }
  return out;
}

int tau_sample(const Group& g, RandomStream& rng) {
  if (g.is_trivial()) throw std::invalid_argument("tau is defined for nontrivial groups");
  Group cur = Group::trivial(g.degree());
  int n = 0;
  while (cur.order() != g.order()) {
    ++n;
    Perm x = g.uniform(rng);
    if (!cur.contains(x)) cur = cur.extended(x);
  }
  return n;
}

namespace {

MonteCarloEstimate mc_run(const Group& g, long long trials, std::uint64_t seed, int workers,
                          int d_hint, bool parallel) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (g.is_trivial()) throw std::invalid_argument("tau is defined for nontrivial groups");
  int cap_base = d_hint >= 0 ? d_hint : static_cast<int>(std::ceil(std::log2(
                                            static_cast<double>(g.order()))));
  int tau_cap = 10 * (cap_base + 3);

  std::map<int, long long> hist;
  long long overflow = 0;
#pragma omp parallel if (parallel) num_threads(workers > 0 ? workers : omp_get_max_threads())
  {
    std::map<int, long long> local;
    long long local_over = 0;
#pragma omp for schedule(static)
    for (long long t = 0; t < trials; ++t) {
      RandomStream rs(seed, static_cast<std::uint64_t>(t));
      int tau = tau_sample(g, rs);
      if (tau > tau_cap)
        ++local_over;
      else
        ++local[tau];
    }
#pragma omp critical
    {
      overflow += local_over;
      for (auto& [k, v] : local) hist[k] += v;
    }
  }

  MonteCarloEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.histogram = std::move(hist);
  est.overflow = overflow;
  est.tau_cap = tau_cap;
  long long sum = 0, sumsq = 0;
  for (auto& [k, v] : est.histogram) {
    sum += static_cast<long long>(k) * v;
    sumsq += static_cast<long long>(k) * k * v;
  }
  est.mean = static_cast<double>(sum) / static_cast<double>(trials);
  if (trials > 1) {
    double var = (static_cast<double>(sumsq) -
                  static_cast<double>(sum) * static_cast<double>(sum) / trials) /
                 (static_cast<double>(trials) - 1);
    est.stderr_ = std::sqrt(std::max(var, 0.0) / static_cast<double>(trials));
  }
  return est;
}

}  // namespace

MonteCarloEstimate montecarlo_e(const Group& g, long long trials, std::uint64_t seed,
                                int workers, int d_hint) {
  return mc_run(g, trials, seed, workers, d_hint, true);
}

MonteCarloEstimate montecarlo_e_serial(const Group& g, long long trials, std::uint64_t seed,
                                       int d_hint) {
  return mc_run(g, trials, seed, 1, d_hint, false);
}

std::vector<TailInequalityRow> maximal_tail_inequality(const GenPolynomial& p,
                                                       const MaximalTable& t, unsigned k_max) {
  std::vector<TailInequalityRow> rows;
  for (unsigned k = 0; k <= k_max; ++k) {
    Rational lhs = 1 - p.eval(k);
    Rational rhs = 0;
    for (const auto& [n, row] : t.rows)
      rhs += Rational(BigInt(row.m), boost::multiprecision::pow(BigInt(n), k));
    rows.push_back({k, lhs, rhs, lhs <= rhs});
  }
  return rows;
}

// sum_{k >= d+2} n^{-k} = 1 / (n^{d+1} (n - 1))
static Rational geometric_tail(std::uint32_t n, int d) {
  using boost::multiprecision::pow;
  return Rational(BigInt(1), pow(BigInt(n), d + 1) * (n - 1));
}

Rational mu_p_value(const MaximalTable& t, int d, std::uint32_t p) {
  Rational s = 0;
  for (const auto& [n, row] : t.rows) {
    if (row.type_a == 0) continue;
    std::uint32_t m = n;
    bool power_of_p = true;
    while (m > 1) {
      if (m % p) {
        power_of_p = false;
        break;
      }
      m /= p;
    }
    if (!power_of_p) continue;
    s += Rational(BigInt(row.type_a)) * geometric_tail(n, d);
  }
  return s;
}

Rational mu_star_value(const MaximalTable& t, int d) {
  Rational s = 0;
  for (const auto& [n, row] : t.rows) {
    if (row.type_b == 0) continue;
    s += Rational(BigInt(row.type_b)) * geometric_tail(n, d);
  }
  return s;
}

}  // namespace genwait
