// Times the OpenMP kernels against their serial reference. Both paths write
// per-index results into preallocated slots, so the outputs must agree
// exactly; this binary reports wall times, the equality itself is asserted in
// the test suite.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "akizuki/nonfiniteness.hpp"
#include "akizuki/parallel.hpp"
#include "akizuki/suite.hpp"

using namespace akizuki;
using clock_t_ = std::chrono::steady_clock;

namespace {

double run_chain(const ParamsPtr& P, long r, long trials, bool serial,
                 long* relations) {
  auto t0 = clock_t_::now();
  ChainReport rep = strict_chain_search(P, r, trials, 2026, 6, serial);
  auto t1 = clock_t_::now();
  *relations = rep.relations_found;
  return std::chrono::duration<double>(t1 - t0).count();
}

double run_suite_once(SuiteConfig cfg, bool serial, long* failed) {
  cfg.serial = serial;
  auto t0 = clock_t_::now();
  Report rep = run_suite(cfg);
  auto t1 = clock_t_::now();
  *failed = rep.failed();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long trials = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 400;
  std::printf("threads available: %d\n\n", parallel_threads());

  SuiteConfig cfg;
  cfg.ring = BaseRing::poly_rationals();
  ParamsPtr P = build_params(cfg);

  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial s", "openmp s", "ratio");
  for (long r = 1; r <= 3; ++r) {
    long rel_s = 0, rel_p = 0;
    double ts = run_chain(P, r, trials, true, &rel_s);
    double tp = run_chain(P, r, trials, false, &rel_p);
    std::printf("%-28s %10.3f %10.3f %8.2f\n",
                ("chain r=" + std::to_string(r) + " trials=" +
                 std::to_string(trials))
                    .c_str(),
                ts, tp, ts / tp);
    if (rel_s != rel_p) {
      std::printf("MISMATCH: serial and parallel disagree\n");
      return 1;
    }
  }

  cfg.trials = trials;
  cfg.suites = {"eq6", "nonfiniteness", "oracle-equivalence"};
  long fail_s = 0, fail_p = 0;
  double ts = run_suite_once(cfg, true, &fail_s);
  double tp = run_suite_once(cfg, false, &fail_p);
  std::printf("%-28s %10.3f %10.3f %8.2f\n",
              ("suites trials=" + std::to_string(trials)).c_str(), ts, tp,
              ts / tp);
  if (fail_s != 0 || fail_p != 0) {
    std::printf("UNEXPECTED FAILURES: serial=%ld parallel=%ld\n", fail_s, fail_p);
    return 1;
  }
  return 0;
}
