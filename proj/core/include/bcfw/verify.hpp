#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcfw {

struct SuiteResult {
  std::string name;
  bool ok = true;
  long checks = 0;
  std::vector<std::string> failures;

  void require(bool condition, const std::string& message) {
    ++checks;
    if (!condition) {
      ok = false;
      if (failures.size() < 50) failures.push_back(message);
    }
  }
};

struct VerifyConfig {
  int n = 6;
  int k = -1;  // -1: all k for this n
  std::uint64_t seed = 0;
  int samples = 5;
  int zs = 3;
  int surjectivity_points = 100;
  int domino_seeds = 10;
  int jobs = 1;
};

namespace verify {

// Cell counts against the closed form and the lattice-walk count.
SuiteResult counts(int n_max);
// to_permutation == algorithmic_permutation == pipe dream of the
// oplus-diagram; anti-excedances; walk bijection roundtrips.
SuiteResult permutation_coherence(int n_max);
// Frozen worked examples: diagrams, matrices, permutations, sign tables.
SuiteResult regressions();
// Domino theorem at desk scale for a single n.
SuiteResult domino(int n, const VerifyConfig& cfg);
// invert_point after amap recovers each sampled point exactly.
SuiteResult inverse_roundtrip(int n, const VerifyConfig& cfg);
// Boundary twistor sign laws on cell samples.
SuiteResult boundary_law(int n, const VerifyConfig& cfg);
// Separators for every unordered pair of cells at this n, all k mixed.
SuiteResult separation(int n, const VerifyConfig& cfg);
// Var classification, shift involutions, permutation equalities.
SuiteResult boundary_pairing(int n, const VerifyConfig& cfg);
// Random interior points are accepted by exactly one cell.
SuiteResult surjectivity(int n, const VerifyConfig& cfg);
// The three worked promotions and the proportional-coefficient law.
SuiteResult promotions(const VerifyConfig& cfg);
// Sign signatures of the one-step decomposition pieces.
SuiteResult middle_decomposition(int n, int k, const VerifyConfig& cfg);

// Everything applicable to one (n, k-or-all) configuration; used by the
// command line `verify`.
std::vector<SuiteResult> run_all(const VerifyConfig& cfg);

}  // namespace verify
}  // namespace bcfw
