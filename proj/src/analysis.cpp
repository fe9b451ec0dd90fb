#include "genwait/analysis.hpp"

#include <json.hpp>
#include <sstream>

#include "genwait/version.hpp"

namespace genwait {

using ordered_json = nlohmann::ordered_json;

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_decimal(const Rational& r, int digits) {
  BigInt num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  BigInt rem = scaled % den;
  if (rem * 2 >= den) ++q;  // round half up
  BigInt ip = q / scale, fp = q % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), digits - static_cast<int>(frac.size()), '0');
  return (neg ? "-" : "") + ip.str() + "." + frac;
}

bool Report::all_pass() const {
  for (const Verdict& v : verdicts)
    if (!v.pass) return false;
  return true;
}

namespace {

std::string dbl(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

struct VerdictSink {
  std::vector<Verdict>& out;
  void add(std::string name, bool pass, std::string lhs, std::string rhs,
           std::string note = "") {
    out.push_back({std::move(name), pass, std::move(lhs), std::move(rhs), std::move(note)});
  }
  void cmp_le(std::string name, const Rational& lhs, const Rational& rhs,
              std::string note = "") {
    add(std::move(name), lhs <= rhs, rational_str(lhs), rational_str(rhs), std::move(note));
  }
};

}  // namespace

Report analyze(const GroupSpec& spec, const AnalyzeOptions& opt) {
  Report r;
  r.spec = spec.print();
  r.seed = opt.seed;
  Group g = spec.build();
  r.degree = g.degree();
  r.order = g.order().str();
  r.eta_used = opt.eta ? *opt.eta : eta_constant(opt.prime_bound, opt.parallel);

  if (g.is_trivial()) {
    // tau is identically 1: the first draw already generates the group.
    // Excluded from the series identities, which presume a nontrivial group.
    r.trivial = true;
    r.e_exact = 1;
    r.e_decimal = rational_decimal(r.e_exact);
    r.warning = "trivial group: expectation is 1 by convention; series checks skipped";
    return r;
  }

  if (opt.montecarlo_only) {
    r.mc = montecarlo_e(g, opt.trials, opt.seed, opt.workers);
    VerdictSink vs{r.verdicts};
    vs.add("mc_no_overflow", r.mc->overflow == 0, std::to_string(r.mc->overflow), "0");
    return r;
  }

  LatticeOptions lopt{opt.lattice_cap, opt.parallel};
  SubgroupLattice L = SubgroupLattice::enumerate(g, lopt);
  MoebiusTable M = MoebiusTable::compute(L);
  QuotientLattices Q(L, lopt);

  r.profile = profile(Q, TieBreak::LeastFirst);
  GenerationProfile alt = profile(Q, TieBreak::GreatestFirst);
  r.series = chief_series(Q, TieBreak::LeastFirst);
  r.maximals = classify_maximals(Q);
  r.min_gens = min_generators(g, std::max<std::size_t>(opt.mingen_cap, opt.lattice_cap));
  const int d = r.profile.max_sylow_rank;
  const unsigned k_max = opt.k_max >= 0 ? static_cast<unsigned>(opt.k_max)
                                        : static_cast<unsigned>(d + 8);

  GenPolynomial P = hall_polynomial(L, M);
  r.e_exact = expected_exact(L, M);
  r.e_decimal = rational_decimal(r.e_exact);
  for (const auto& [p, rank] : r.profile.sylow_rank) {
    (void)rank;
    r.mu_p[p] = mu_p_value(r.maximals, d, p);
  }
  r.mu_star = mu_star_value(r.maximals, d);

  VerdictSink vs{r.verdicts};

  {  // lattice sanity
    bool rows_ok = true, lagrange_ok = true;
    for (std::size_t h = 0; h < L.size(); ++h) {
      std::int64_t s = M.at(h);
      for (std::uint32_t k : L.supersets(h)) s += M.at(k);
      if (s != (h == L.top() ? 1 : 0)) rows_ok = false;
      if (static_cast<std::uint64_t>(g.order()) % L.node(h).order != 0) lagrange_ok = false;
    }
    vs.add("moebius_row_sums", rows_ok, std::to_string(L.size()) + " rows", "delta at top");
    vs.add("lagrange", lagrange_ok, "node orders", "divide group order");
  }

  for (const auto& [p, dp] : r.profile.sylow_rank) {
    int ap = r.profile.alpha_of(p);
    vs.add("alpha_le_sylow_rank(" + std::to_string(p) + ")", ap <= dp, std::to_string(ap),
           std::to_string(dp));
  }
  {
    int a2 = r.profile.alpha_of(2), d2 = r.profile.rank_of(2), beta = r.profile.beta;
    vs.add("alpha2_beta_le_sylow2_rank", a2 + beta <= d2, std::to_string(a2 + beta),
           std::to_string(d2));
    vs.add("beta_bound_sylow2", beta == 0 || beta <= d2 - 1, std::to_string(beta),
           beta == 0 ? "0 (vacuous)" : std::to_string(d2 - 1));
  }
  {
    std::size_t normal_count = 0;
    for (std::size_t i = 0; i < L.size(); ++i)
      if (L.node(i).normal) ++normal_count;
    bool simple_nonabelian = normal_count == 2 && !L.is_abelian(L.top());
    if (simple_nonabelian) {
      std::size_t s2 = sylow_subgroup(L, 2);
      vs.add("simple_sylow2_noncyclic", !L.is_cyclic(s2),
             "|P|=" + std::to_string(L.node(s2).order), "noncyclic");
    } else {
      vs.add("simple_sylow2_noncyclic", true, "-", "-", "not a nonabelian simple group");
    }
  }
  vs.add("chief_profile_series_independent",
         alt.alpha == r.profile.alpha && alt.beta == r.profile.beta, "two tie-break orders",
         "equal profiles");
  vs.add("mingen_le_sylow_rank_plus_1", r.min_gens <= d + 1, std::to_string(r.min_gens),
         std::to_string(d + 1));
  for (const auto& [p, dp] : r.profile.sylow_rank) {
    int bound = static_cast<int>(r.degree / p);
    vs.add("sylow_rank_le_degree_over_p(" + std::to_string(p) + ")", dp <= bound,
           std::to_string(dp), std::to_string(bound));
  }

  {
    bool ok = true;
    for (const auto& [n, row] : r.maximals.rows)
      if (n < 5 && row.type_b != 0) ok = false;
    vs.add("typeB_index_at_least_5", ok, "counts below index 5", "0");
    long long btot = 0;
    for (const auto& [n, row] : r.maximals.rows) btot += row.type_b;
    vs.add("typeB_implies_beta", btot == 0 || r.profile.beta != 0, std::to_string(btot),
           "beta=" + std::to_string(r.profile.beta));
  }
  for (const auto& [n, row] : r.maximals.rows) {
    if (row.type_a == 0) continue;
    auto ps = prime_factors(n);
    bool prime_power = ps.size() == 1;
    std::uint32_t p = ps[0];
    int t = 0;
    for (std::uint32_t m = n; m > 1; m /= p) ++t;
    int apt = 0;
    if (auto it = r.profile.alpha.find({p, t}); it != r.profile.alpha.end()) apt = it->second;
    Rational bound = Rational(boost::multiprecision::pow(BigInt(n), apt + 1), BigInt(p - 1));
    bool ok = prime_power && apt != 0 && Rational(row.type_a) <= bound;
    vs.add("typeA_count_bound(" + std::to_string(n) + ")", ok, std::to_string(row.type_a),
           rational_str(bound), "alpha_{p,t}=" + std::to_string(apt));
  }
  for (const auto& [n, row] : r.maximals.rows) {
    if (row.type_b == 0) continue;
    long long beta = r.profile.beta;
    Rational bound = Rational(BigInt(beta) * (beta + 1) * n * n, 2);
    vs.add("typeB_count_bound(" + std::to_string(n) + ")", Rational(row.type_b) <= bound,
           std::to_string(row.type_b), rational_str(bound));
  }

  {
    auto rows = maximal_tail_inequality(P, r.maximals, k_max);
    bool ok = true;
    for (const auto& row : rows) ok = ok && row.ok;
    vs.add("pgen_upper_bound_by_maximals", ok, "1-P(k), k<=" + std::to_string(k_max),
           "sum m_n/n^k");
  }
  {
    bool ok = true;
    Rational prev = -1;
    for (unsigned k = 0; k <= static_cast<unsigned>(d + 10); ++k) {
      Rational v = P.eval(k);
      if (v < 0 || v > 1 || v < prev) ok = false;
      prev = v;
    }
    vs.add("pgen_in_unit_range_monotone", ok, "P(k), k<=" + std::to_string(d + 10), "[0,1] nondecreasing");
    bool iff_ok = true;
    for (unsigned k = 0; k <= static_cast<unsigned>(d + 10); ++k) {
      bool pos = P.eval(k) > 0;
      if (pos != (static_cast<int>(k) >= r.min_gens)) iff_ok = false;
    }
    vs.add("pgen_positive_iff_generating_number", iff_ok, "least k with P(k)>0",
           std::to_string(r.min_gens));
  }
  if (g.order() <= 12) {
    bool ok = true;
    for (unsigned k = 0; k <= 3; ++k)
      if (P.eval(k) != p_gen_bruteforce(g, k)) ok = false;
    vs.add("hall_matches_bruteforce", ok, "P(k), k<=3", "tuple counting");
  }
  for (unsigned K : {0u, 5u, 20u}) {
    TruncatedSeries ts = expected_series_truncated(L, M, K);
    bool ok = ts.value <= r.e_exact && r.e_exact <= ts.value + ts.tail;
    vs.add("exact_in_truncation_bracket(K=" + std::to_string(K) + ")", ok,
           rational_str(r.e_exact),
           "[" + rational_str(ts.value) + ", +" + rational_str(ts.tail) + "]");
  }

  Rational mu_sum = 0;
  for (const auto& [p, mup] : r.mu_p) {
    int ap = r.profile.alpha_of(p);
    Rational absolute = p == 2 ? Rational(1, 2) : Rational(1, BigInt(p - 1) * (p - 1));
    Rational refined = absolute / boost::multiprecision::pow(BigInt(p), d - ap);
    bool ok = ap == 0 ? (mup == 0) : (mup <= refined && mup <= absolute);
    vs.add("mu_p_bound(" + std::to_string(p) + ")", ok, rational_str(mup),
           ap == 0 ? "0 (alpha_p=0)" : rational_str(refined));
    mu_sum += mup;
  }
  {
    bool ok;
    std::string rhs;
    if (r.profile.beta == 0) {
      ok = r.mu_star == 0;
      rhs = "0 (beta=0)";
    } else {
      int e = d - (r.profile.beta + 1);
      Rational refined = Rational(1, BigInt(4) * boost::multiprecision::pow(BigInt(5), e));
      ok = e >= 0 && r.mu_star <= refined && r.mu_star <= Rational(1, 4);
      rhs = rational_str(refined);
    }
    vs.add("mu_star_bound", ok, rational_str(r.mu_star), rhs);
    Rational mu2 = 0;
    if (auto it = r.mu_p.find(2); it != r.mu_p.end()) mu2 = it->second;
    vs.cmp_le("mu2_plus_mustar_le_half", mu2 + r.mu_star, Rational(1, 2));
  }
  {
    TruncatedSeries head = expected_series_truncated(L, M, static_cast<unsigned>(d + 1));
    Rational tail = r.e_exact - head.value;  // sum over k >= d+2 of (1-P(k))
    vs.cmp_le("tail_sum_dominated_by_mu", tail, mu_sum + r.mu_star);
    vs.cmp_le("head_sum_le_d_plus_2", head.value, Rational(d + 2));
    vs.cmp_le("expectation_le_chain_bound", r.e_exact, Rational(d + 2) + mu_sum + r.mu_star);
  }
  {
    Rational eta_upper = rational_from_double(r.eta_used.upper);
    vs.cmp_le("expectation_le_rank_plus_eta", r.e_exact, Rational(d) + eta_upper,
              "eta upper " + dbl(r.eta_used.upper));
    vs.cmp_le("expectation_le_half_degree_plus_eta", r.e_exact,
              Rational(r.degree / 2) + eta_upper, "degree " + std::to_string(r.degree));
  }

  if (opt.montecarlo) {
    r.mc = montecarlo_e(g, opt.trials, opt.seed, opt.workers, d);
    double exact = static_cast<double>(r.e_exact);
    if (r.mc->stderr_) {
      double dev = std::fabs(r.mc->mean - exact);
      vs.add("mc_within_3_stderr", dev <= 3 * *r.mc->stderr_, dbl(dev),
             dbl(3 * *r.mc->stderr_));
    }
    vs.add("mc_no_overflow", r.mc->overflow == 0, std::to_string(r.mc->overflow), "0");
    int min_tau = r.mc->histogram.empty() ? 0 : r.mc->histogram.begin()->first;
    vs.add("mc_tau_ge_mingen", min_tau >= r.min_gens, std::to_string(min_tau),
           std::to_string(r.min_gens));
  }

  return r;
}

std::string Report::to_json() const {
  ordered_json j;
  j["tool"] = {{"name", "genwait"}, {"version", kVersion}};
  j["group"] = {{"spec", spec}, {"degree", degree}, {"order", order}};
  if (!warning.empty()) j["warning"] = warning;
  j["seed"] = seed;
  if (!trivial && !profile.sylow_rank.empty()) {
    ordered_json pr;
    ordered_json dp = ordered_json::object();
    for (const auto& [p, rk] : profile.sylow_rank) dp[std::to_string(p)] = rk;
    pr["sylow_rank"] = dp;
    ordered_json al = ordered_json::object();
    for (const auto& [pt, c] : profile.alpha)
      al[std::to_string(pt.first) + "^" + std::to_string(pt.second)] = c;
    pr["alpha"] = al;
    ordered_json alp = ordered_json::object();
    for (const auto& [p, c] : profile.alpha_p) alp[std::to_string(p)] = c;
    pr["alpha_p"] = alp;
    pr["beta"] = profile.beta;
    pr["max_sylow_rank"] = profile.max_sylow_rank;
    pr["min_generators"] = min_gens;
    j["profile"] = pr;

    ordered_json cs = ordered_json::array();
    for (const ChiefFactor& f : series.factors) {
      ordered_json fj;
      fj["order"] = f.order;
      fj["abelian"] = f.abelian;
      if (f.abelian) {
        fj["prime"] = f.prime;
        fj["exponent"] = f.exponent;
      }
      fj["complemented"] = f.complemented;
      cs.push_back(fj);
    }
    j["chief_series"] = cs;

    ordered_json mx = ordered_json::object();
    for (const auto& [n, row] : maximals.rows)
      mx[std::to_string(n)] = {{"m", row.m}, {"typeA", row.type_a}, {"typeB", row.type_b}};
    j["maximals"] = mx;

    ordered_json mu = ordered_json::object();
    for (const auto& [p, v] : mu_p) mu[std::to_string(p)] = rational_str(v);
    j["mu"] = {{"mu_p", mu}, {"mu_star", rational_str(mu_star)}};
  }
  j["expectation"] = {{"exact", rational_str(e_exact)},
                      {"decimal", e_decimal},
                      {"eta_interval", {eta_used.lower, eta_used.upper}}};
  if (mc) {
    ordered_json m;
    m["mean"] = mc->mean;
    if (mc->stderr_)
      m["stderr"] = *mc->stderr_;
    else
      m["stderr"] = nullptr;
    m["trials"] = mc->trials;
    m["seed"] = mc->seed;
    m["tau_cap"] = mc->tau_cap;
    m["overflow"] = mc->overflow;
    ordered_json h = ordered_json::object();
    for (const auto& [tau, count] : mc->histogram) h[std::to_string(tau)] = count;
    m["histogram"] = h;
    j["montecarlo"] = m;
  }
  ordered_json vj = ordered_json::array();
  for (const Verdict& v : verdicts) {
    ordered_json o;
    o["name"] = v.name;
    o["status"] = v.pass ? "pass" : "FAIL";
    o["lhs"] = v.lhs;
    o["rhs"] = v.rhs;
    if (!v.note.empty()) o["note"] = v.note;
    vj.push_back(o);
  }
  j["verdicts"] = vj;
  j["all_pass"] = all_pass();
  return j.dump(2) + "\n";
}

}  // namespace genwait
