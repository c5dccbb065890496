#pragma once

#include <cstdint>
#include <string>

#include "bcfw/ampl.hpp"
#include "bcfw/chords.hpp"
#include "bcfw/twistor.hpp"

namespace bcfw {

// A pure functionary with fixed opposite signs on the images of two cells,
// for every positive Z.
struct Separator {
  Functionary functionary;
  int sign_a = 0;  // predicted sign on the image of the first cell
  int sign_b = 0;  // always -sign_a
};

// Recursive case dispatch A..F on the pair of chord diagrams (same marker
// set, possibly different chord counts). Throws on equal diagrams.
Separator separator(const ChordDiagram& diagram_a, const ChordDiagram& diagram_b);

// Promotion of a functionary under the top extension by the chord
// (i, i+1, n-2, n-1): every occurrence of n-1 expands as
//   Z_{n-1} <- <i,i+1,n-2,n> Z_{n-1} - <i,i+1,n-1,n> Z_{n-2}
// and every occurrence of n via the three-term rule. The promoted sign
// gains (-1)^{d_{n-1}(F)}.
Functionary promote_case_E(const Functionary& f, int i, int n);

// Promotion under the right extension: every occurrence of i+1 expands as
//   Z_{i+1} <- <i,n-2,n-1,n> Z_{i+1} - <i+1,n-2,n-1,n> Z_i
// The promoted sign gains (-1)^{k' (d_{i+1}(F) + d_n(F))} with k' read off
// the construction (one inc per descendant of the new top chord plus one).
Functionary promote_case_F(const Functionary& f, int i, int n);

// Numeric verification of a separator on seeded samples of both cells over
// a panel of Z matrices. Every evaluation must be nonzero with the
// predicted sign.
struct SeparationCheck {
  bool ok = true;
  int evaluations = 0;
  std::string failure;
};
SeparationCheck verify_separator(const ChordDiagram& diagram_a, const ChordDiagram& diagram_b,
                                 const Separator& sep, std::uint64_t seed, int samples = 5,
                                 int zs = 3);

}  // namespace bcfw
