// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exact arithmetic throughout; a single counterexample is
// decisive. Universal claims over Z run against a seeded panel of three
// positive matrices.

#include <cstdio>
#include <thread>

#include "bcfw/verify.hpp"

using bcfw::SuiteResult;
using bcfw::VerifyConfig;

namespace {

int failures = 0;

void report(const char* criterion, const std::vector<SuiteResult>& results) {
  bool ok = true;
  long checks = 0;
  for (const SuiteResult& r : results) {
    ok = ok && r.ok;
    checks += r.checks;
  }
  std::printf("%s %s (%ld checks)\n", ok ? "PASS" : "FAIL", criterion, checks);
  if (!ok) {
    ++failures;
    for (const SuiteResult& r : results)
      for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  VerifyConfig cfg;
  cfg.seed = 0;
  cfg.samples = 5;
  cfg.zs = 3;
  cfg.domino_seeds = 10;
  cfg.surjectivity_points = 100;
  cfg.jobs = static_cast<int>(std::min(8u, std::thread::hardware_concurrency()));
  if (cfg.jobs < 1) cfg.jobs = 1;

  using namespace bcfw::verify;

  report("criterion-1  cell counts, n <= 10", {counts(10)});
  report("criterion-2  permutation coherence, n <= 9", {permutation_coherence(9)});
  report("criterion-3  worked-example regressions", {regressions()});
  {
    std::vector<SuiteResult> r;
    for (int n = 4; n <= 8; ++n) r.push_back(domino(n, cfg));
    report("criterion-4  domino theorem, n <= 8, 10 seeds", r);
  }
  {
    std::vector<SuiteResult> r;
    for (int n = 4; n <= 8; ++n) r.push_back(inverse_roundtrip(n, cfg));
    report("criterion-5  inverse roundtrip, n <= 8, 10 seeds, 3 Z", r);
  }
  {
    std::vector<SuiteResult> r;
    for (int n = 6; n <= 8; ++n) r.push_back(separation(n, cfg));
    report("criterion-6  separation, all pairs, n = 6, 7, 8", r);
  }
  {
    std::vector<SuiteResult> r;
    for (int n = 4; n <= 8; ++n) r.push_back(boundary_law(n, cfg));
    report("criterion-7  boundary twistor law, n <= 8", r);
  }
  {
    std::vector<SuiteResult> r;
    for (int n = 4; n <= 7; ++n) r.push_back(boundary_pairing(n, cfg));
    report("criterion-8  boundary pairing and shifts, n <= 7", r);
  }
  {
    std::vector<SuiteResult> r;
    for (int n = 4; n <= 7; ++n) r.push_back(surjectivity(n, cfg));
    report("criterion-9  surjectivity spot-check, 100 points, n <= 7", r);
  }
  report("criterion-10 promotion identities", {promotions(cfg)});
  report("criterion-11 middle-embedding decomposition (7,1), (8,2)",
         {middle_decomposition(7, 1, cfg), middle_decomposition(8, 2, cfg)});

  if (failures > 0) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
