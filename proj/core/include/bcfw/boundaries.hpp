#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcfw/chords.hpp"
#include "bcfw/domino.hpp"
#include "bcfw/matrix.hpp"
#include "bcfw/permutation.hpp"

namespace bcfw {

// One positive coordinate of a cell in its domino description: a hatted
// single variable, or a 2x2 minor (eta for same-end parent/child, theta
// for head-to-tail siblings).
enum class VarKind { EpsHat, Alpha, Beta, GammaHat, DeltaHat, Eta, Theta };

struct VarElement {
  VarKind kind = VarKind::EpsHat;
  int chord = -1;  // 0-based; for Eta the parent, for Theta the head chord
  int other = -1;  // Eta: the same-end child; Theta: the tail chord
  bool operator==(const VarElement&) const = default;
  std::string str() const;
};

struct VarSets {
  std::vector<VarElement> var;        // the minimal inequality set
  std::vector<VarElement> var1;       // the 5k single variables
  std::vector<VarElement> var_tilde;  // everything, minors included
};

// Membership rules: eta only for same-end parent/child (excluding the
// parent's delta-hat and the child's gamma-hat), theta only for
// head-to-tail siblings (excluding the head chord's gamma-hat and the tail
// chord's beta).
VarSets var_set(const ChordDiagram& diagram);

enum class ShiftKind { TailLeft, TailRight, HeadLeft, HeadRight };

struct ShiftResult {
  ChordDiagram target;
  int moved_chord = -1;   // index of the shifted chord in the target
  std::string case_name;  // which clause of the definition applied
};

// The (un)obstructed shift of one chord endpoint, including the
// rolling-heads variants; nullopt when no clause applies.
std::optional<ShiftResult> shift(const ChordDiagram& diagram, int chord, ShiftKind kind);

// Decorated permutation of the codimension-one stratum where `star`
// vanishes, obtained by editing the algorithmic permutation word. The
// beta-of-a-sticky-child case is rejected.
DecoratedPermutation boundary_permutation(const ChordDiagram& diagram, const VarElement& star);

// Classification of a Var element: either the stratum lies in the
// amplituhedron-boundary preimage, or it is shared with another cell.
struct BoundaryClass {
  VarElement star;
  bool is_sa = false;
  std::string rule;
  std::optional<ChordDiagram> partner;
  std::optional<VarElement> partner_star;
};

std::vector<BoundaryClass> pair_boundaries(const ChordDiagram& diagram);

// A nonnegative matrix on the stratum star = 0 that witnesses membership
// in S_dA: a domino assignment with the element set to zero.
RationalMatrix sa_witness(const ChordDiagram& diagram, const VarElement& star, std::uint64_t seed);

}  // namespace bcfw
