#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcfw/matrix.hpp"
#include "bcfw/twistor.hpp"

namespace bcfw {

// An n x (k+4) matrix with all maximal minors strictly positive, verified
// exactly at construction.
class PositiveZ {
 public:
  PositiveZ(int n, int k, RationalMatrix mat);
  int n() const { return n_; }
  int k() const { return k_; }
  const RationalMatrix& mat() const { return mat_; }
  const Rat& entry(int row, int col) const { return mat_.at(row, col); }

 private:
  int n_;
  int k_;
  RationalMatrix mat_;
};

// Vandermonde matrix at strictly increasing positive nodes: entry (i, j) is
// nodes[i]^(j-1). Totally positive; the minors are still re-verified.
PositiveZ make_positive_Z(int n, int k, const std::vector<Rat>& nodes);
// Default panel: nodes 1..n first, then seeded monotone perturbations.
std::vector<PositiveZ> z_panel(int n, int k, int count, std::uint64_t seed);
// Totally positive sample of Gr> over an arbitrary column set (Vandermonde
// rows at seeded increasing nodes).
RationalMatrix sample_positive_point(const IndexSet& cols, int k, std::uint64_t seed);

// Y = C Z, a k x (k+4) matrix of rank k.
RationalMatrix amap(const RationalMatrix& c, const PositiveZ& z);

// Twistor coordinate <Y Z_I> for an ordered 4-tuple; antisymmetric,
// repeated indices give zero.
Rat twistor(const RationalMatrix& y, const PositiveZ& z, const std::array<int, 4>& tuple);

// Caches the canonical twistors of a fixed (Y, Z).
class TwistorEvaluator {
 public:
  TwistorEvaluator(const RationalMatrix& y, const PositiveZ& z) : y_(&y), z_(&z) {}
  Rat eval(const TwistorSymbol& symbol);
  Rat eval_tuple(const std::array<int, 4>& ordered);
  Rat eval_functionary(const Functionary& f);

 private:
  const RationalMatrix* y_;
  const PositiveZ* z_;
  std::map<TwistorSymbol, Rat> cache_;
};

Rat eval_functionary(const Functionary& f, const RationalMatrix& y, const PositiveZ& z);

// True when the row span contains a nonzero vector supported on two
// cyclically consecutive pairs {i, i(+)1, j, j(+)1}; returns the witness.
std::optional<std::pair<int, int>> in_S_partial_A(const RationalMatrix& c);

// ---------------------------------------------------------------------
// Sampling experiment for the middle-embedding decomposition: the pieces
// pre_{n-1} Gr>, S_{1,n;0,k-1}, and S_{j,n;k1,k2}, their predicted twistor
// sign signatures, and pairwise distinguishing functionaries.

struct MiddlePiece {
  std::string name;
  int i = 0;        // tail marker of the added top chord; 0 for the pre piece
  int k1 = -1;      // -1 for the pre piece
  std::vector<RationalMatrix> samples;
};

struct MiddleDecompositionReport {
  bool ok = true;
  std::vector<std::string> failures;
  int pieces = 0;
  int checks = 0;
};

MiddleDecompositionReport check_middle_decomposition(int n, int k, std::uint64_t seed,
                                                     int samples_per_piece = 5, int zs = 3);

}  // namespace bcfw
