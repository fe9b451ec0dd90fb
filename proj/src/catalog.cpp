#include "genwait/catalog.hpp"

#include <omp.h>

#include <sstream>

namespace genwait {

const std::vector<std::string>& builtin_catalog() {
  static const std::vector<std::string> entries = [] {
    std::vector<std::string> v;
    for (int n = 1; n <= 30; ++n) v.push_back("C" + std::to_string(n));
    for (int p : {2, 3, 5})
      for (int d = 1; d <= 3; ++d)
        v.push_back("E(" + std::to_string(p) + "," + std::to_string(d) + ")");
    for (int n = 3; n <= 15; ++n) v.push_back("D" + std::to_string(n));
    v.push_back("Q8");
    for (int n = 3; n <= 6; ++n) v.push_back("S" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) v.push_back("A" + std::to_string(n));
    v.push_back("E(2,2)*C3");
    // SL(2,3) acting on the eight nonzero vectors of F_3^2
    v.push_back("perm(8){(3 4 5)(6 8 7),(1 3 2 6)(4 5 8 7)}");
    v.push_back("GD(1;3,5)");
    v.push_back("GD(1;3,5,7)");
    v.push_back("E(2,2)*E(3,2)");
    return v;
  }();
  return entries;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

CatalogResult run_catalog(const std::string& filter, const AnalyzeOptions& opt) {
  std::vector<std::string> specs;
  for (const std::string& s : builtin_catalog())
    if (filter.empty() || glob_match(filter, s)) specs.push_back(s);

  CatalogResult res;
  res.reports.resize(specs.size());
  AnalyzeOptions entry_opt = opt;
  entry_opt.parallel = false;  // parallelism lives at entry granularity here
  if (!entry_opt.eta) entry_opt.eta = eta_constant(opt.prime_bound, opt.parallel);

  // exceptions must not escape the parallel region; a failed entry becomes
  // a report with a single failed verdict
  const int nthreads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel) num_threads(nthreads)
  for (std::size_t i = 0; i < specs.size(); ++i) {
    try {
      res.reports[i] = analyze(GroupSpec::parse(specs[i]), entry_opt);
    } catch (const std::exception& e) {
      Report r;
      r.spec = specs[i];
      r.seed = opt.seed;
      r.warning = e.what();
      r.verdicts.push_back({"analysis_completed", false, "exception", e.what(), ""});
      res.reports[i] = std::move(r);
    }
  }

  for (const Report& r : res.reports)
    for (const Verdict& v : r.verdicts)
      if (!v.pass) ++res.failed_verdicts;
  return res;
}

std::string CatalogResult::summary_csv() const {
  std::ostringstream os;
  os << "spec,degree,order,max_sylow_rank,min_generators,beta,e_exact,e_decimal,verdicts,"
        "failed\n";
  for (const Report& r : reports) {
    int failed = 0;
    for (const Verdict& v : r.verdicts)
      if (!v.pass) ++failed;
    os << '"' << r.spec << "\"," << r.degree << ',' << r.order << ','
       << r.profile.max_sylow_rank << ',' << r.min_gens << ',' << r.profile.beta << ','
       << rational_str(r.e_exact) << ',' << r.e_decimal << ',' << r.verdicts.size() << ','
       << failed << '\n';
  }
  return os.str();
}

}  // namespace genwait
