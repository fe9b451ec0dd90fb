// Compares the OpenMP kernels against their serial reference paths:
// subgroup-lattice join closure, Monte Carlo tau sampling, and the
// prime-series constants.

#include <omp.h>

#include <chrono>
#include <cstring>
#include <iostream>

#include "genwait/catalog.hpp"
#include "genwait/groupspec.hpp"
#include "genwait/lattice.hpp"
#include "genwait/numseries.hpp"
#include "genwait/probgen.hpp"

using namespace genwait;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = argc > 1 && std::strcmp(argv[1], "--heavy") == 0;
  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    Group s5 = GroupSpec::parse("S5").build();
    LatticeOptions ser{720, false}, par{720, true};
    double ts = time_ms([&] { SubgroupLattice::enumerate(s5, ser); });
    double tp = time_ms([&] { SubgroupLattice::enumerate(s5, par); });
    row("lattice join closure S5", ts, tp);
  }
  if (heavy) {
    Group a6 = GroupSpec::parse("A6").build();
    LatticeOptions ser{720, false}, par{720, true};
    double ts = time_ms([&] { SubgroupLattice::enumerate(a6, ser); });
    double tp = time_ms([&] { SubgroupLattice::enumerate(a6, par); });
    row("lattice join closure A6", ts, tp);
  }
  {
    Group s5 = GroupSpec::parse("S5").build();
    const long long trials = 20000;
    MonteCarloEstimate a, b;
    double ts = time_ms([&] { a = montecarlo_e_serial(s5, trials, 7, 2); });
    double tp = time_ms([&] { b = montecarlo_e(s5, trials, 7, 0, 2); });
    row("montecarlo tau S5 (20k trials)", ts, tp);
    if (a.histogram != b.histogram) {
      std::printf("MISMATCH: serial and parallel Monte Carlo disagree\n");
      return 1;
    }
  }
  {
    PrimeSieve sieve = PrimeSieve::up_to(heavy ? 10000000 : 1000000);
    Interval a, b;
    double ts = time_ms([&] { a = eta_constant(sieve, false); });
    double tp = time_ms([&] { b = eta_constant(sieve, true); });
    row("eta prime series", ts, tp);
    if (a.lower != b.lower || a.upper != b.upper) {
      std::printf("MISMATCH: serial and parallel eta disagree\n");
      return 1;
    }
  }
  {
    Interval a, b;
    double ts = time_ms([&] { a = sigma_limit(1, 1000000, 60, false); });
    double tp = time_ms([&] { b = sigma_limit(1, 1000000, 60, true); });
    row("sigma truncated Euler products", ts, tp);
    if (a.lower != b.lower || a.upper != b.upper) {
      std::printf("MISMATCH: serial and parallel sigma disagree\n");
      return 1;
    }
  }
  std::printf("serial and parallel kernels agree bit-for-bit\n");
  return 0;
}
