#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genwait/groupspec.hpp"
#include "genwait/numseries.hpp"
#include "genwait/probgen.hpp"
#include "genwait/structure.hpp"

namespace genwait {

struct AnalyzeOptions {
  std::uint32_t lattice_cap = 500;
  std::size_t mingen_cap = 2000;
  int k_max = -1;  // range for the maximal-sum bound on 1-P(k); -1 means d+8
  std::uint64_t prime_bound = 1000000;
  std::uint64_t seed = 12345;
  bool montecarlo = false;
  long long trials = 100000;
  int workers = 0;
  bool montecarlo_only = false;
  bool parallel = true;
  std::optional<Interval> eta;  // reuse a precomputed interval if present
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;
  std::string note;
};

struct Report {
  std::string spec;
  Point degree = 0;
  std::string order;
  bool trivial = false;
  std::string warning;

  GenerationProfile profile;
  int min_gens = 0;
  ChiefSeries series;
  MaximalTable maximals;
  Rational e_exact;
  std::string e_decimal;
  Interval eta_used;
  std::map<std::uint32_t, Rational> mu_p;
  Rational mu_star;
  std::optional<MonteCarloEstimate> mc;
  std::vector<Verdict> verdicts;
  std::uint64_t seed = 0;

  bool all_pass() const;
  std::string to_json() const;  // stable field order, byte-identical across runs
};

Report analyze(const GroupSpec& spec, const AnalyzeOptions& opt);

std::string rational_str(const Rational& r);
std::string rational_decimal(const Rational& r, int digits = 10);

}  // namespace genwait
