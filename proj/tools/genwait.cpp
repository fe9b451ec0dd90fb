#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "genwait/analysis.hpp"
#include "genwait/catalog.hpp"
#include "genwait/errors.hpp"
#include "genwait/version.hpp"

using namespace genwait;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GENWAIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed GENWAIT_SEED\n";
    }
  }
  return 12345;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

int run(int argc, char** argv) {
  CLI::App app{"expected number of random elements to generate a finite group: "
               "exact lattice computation, Monte Carlo estimation, and "
               "machine-checked inequality reports"};
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  AnalyzeOptions opt;
  opt.seed = seed;

  std::string spec_text, out_path, filter;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--exact-cap", opt.lattice_cap,
                    "maximum group order for exact subgroup-lattice mode");
    cmd->add_option("--seed", opt.seed, "random seed (default: GENWAIT_SEED or 12345)");
    cmd->add_option("--workers", opt.workers, "worker threads (0 = all cores)");
    cmd->add_option("--k-max", opt.k_max, "largest k for the maximal-sum bound (-1 = d+8)");
    cmd->add_option("--prime-bound", opt.prime_bound, "prime cutoff for constants");
    cmd->add_option("--out", out_path, "write output to this path instead of stdout");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full exact report for one group");
  analyze_cmd->add_option("spec", spec_text, "group specification, e.g. S5 or E(3,2)*C4")
      ->required();
  add_common(analyze_cmd);
  analyze_cmd->add_flag("--montecarlo", opt.montecarlo, "append a Monte Carlo block");
  analyze_cmd->add_flag("--montecarlo-only", opt.montecarlo_only,
                        "skip exact mode (for groups beyond the cap)");
  analyze_cmd->add_option("--trials", opt.trials, "Monte Carlo trials");

  CLI::App* mc_cmd = app.add_subcommand("montecarlo", "Monte Carlo estimate for one group");
  mc_cmd->add_option("spec", spec_text, "group specification")->required();
  mc_cmd->add_option("--trials", opt.trials, "number of independent tau samples");
  add_common(mc_cmd);

  CLI::App* const_cmd = app.add_subcommand("constants", "certified numeric constants");
  std::string which;
  int const_d = 1, const_k = 2, k_extra = 60;
  const_cmd->add_option("which", which, "eta | sigma | gd | abelian")->required();
  const_cmd->add_option("--prime-bound", opt.prime_bound, "prime cutoff");
  const_cmd->add_option("--d", const_d, "rank parameter");
  const_cmd->add_option("--k", const_k, "number of random elements");
  const_cmd->add_option("--k-extra", k_extra, "extra series terms for sigma");
  const_cmd->add_option("--out", out_path, "write output to this path");

  CLI::App* cat_cmd = app.add_subcommand("catalog", "run every check over the built-in corpus");
  cat_cmd->add_option("--filter", filter, "glob over spec strings, e.g. 'S*'");
  add_common(cat_cmd);
  opt.lattice_cap = 500;  // analyze default; catalog raises it below

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(analyze_cmd) || app.got_subcommand(mc_cmd)) {
    if (app.got_subcommand(mc_cmd)) opt.montecarlo_only = true;
    Report r = analyze(GroupSpec::parse(spec_text), opt);
    emit(r.to_json(), out_path);
    return r.all_pass() ? 0 : 1;
  }

  if (app.got_subcommand(const_cmd)) {
    ordered_json j;
    j["tool"] = {{"name", "genwait"}, {"version", kVersion}};
    if (which == "eta") {
      Interval iv = eta_constant(opt.prime_bound);
      j["constant"] = "eta";
      j["prime_bound"] = opt.prime_bound;
      j["interval"] = {iv.lower, iv.upper};
      j["width"] = iv.width();
      j["tail_bound"] = "1/(prime_bound-2), from sum_{m>bound} 1/(m-1)^2 <= integral";
    } else if (which == "sigma") {
      Interval iv = sigma_limit(const_d, opt.prime_bound, k_extra);
      j["constant"] = "sigma";
      j["d"] = const_d;
      j["prime_bound"] = opt.prime_bound;
      j["k_extra"] = k_extra;
      j["interval"] = {iv.lower, iv.upper};
      j["width"] = iv.width();
      j["tail_bound"] =
          "exponent tail 2*2^{-J}(1+2/(J-1)); prime tail 2*bound^{-m}/m; "
          "series tail 4*2^{-(M+1)}(1+2/(M+1))";
    } else if (which == "gd") {
      double v = gd_product_probability(const_d, const_k, opt.prime_bound);
      j["constant"] = "gd_product";
      j["d"] = const_d;
      j["k"] = const_k;
      j["prime_bound"] = opt.prime_bound;
      j["value"] = v;
    } else if (which == "abelian") {
      double v = abelian_product_probability(const_d, const_k, opt.prime_bound);
      j["constant"] = "abelian_product";
      j["d"] = const_d;
      j["k"] = const_k;
      j["prime_bound"] = opt.prime_bound;
      j["value"] = v;
    } else {
      std::cerr << "unknown constant: " << which << "\n";
      return 2;
    }
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }

  if (app.got_subcommand(cat_cmd)) {
    if (cat_cmd->count("--exact-cap") == 0) opt.lattice_cap = 720;
    opt.eta = eta_constant(opt.prime_bound);
    CatalogResult res = run_catalog(filter, opt);
    if (!out_path.empty()) {
      fs::create_directories(out_path);
      for (const Report& r : res.reports) {
        std::string name = r.spec;
        for (char& c : name)
          if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-')) c = '_';
        std::ofstream f(fs::path(out_path) / (name + ".json"));
        f << r.to_json();
      }
      std::ofstream f(fs::path(out_path) / "summary.csv");
      f << res.summary_csv();
      std::cout << res.reports.size() << " groups, " << res.failed_verdicts
                << " failed verdicts; reports in " << out_path << "\n";
    } else {
      std::cout << res.summary_csv();
    }
    return res.failed_verdicts == 0 ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
