#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcfw/index_set.hpp"
#include "bcfw/permutation.hpp"

namespace bcfw {

// The quadruple (i, i+1, j, j+1): tail on segment (i, i+1), head on
// (j, j+1). Always consecutive integers, j >= i + 2.
struct Chord {
  int i = 0;
  int j = 0;
  bool operator==(const Chord&) const = default;
  auto operator<=>(const Chord&) const = default;
};

// Per-chord structural data. Chord indices are 0-based positions in the
// diagram's lexicographic chord order.
struct ChordStats {
  int parent = -1;  // -1 for top chords
  std::vector<int> children;
  int below = 0;    // number of descendants
  int behind = 0;   // number of chords starting after this one
  int beyond = -1;  // descendants of the parent that come before; -1 for top
  int sticky_first = -1;  // c_{*l}: first chord of the maximal sticky chain
  int sticky_last = -1;   // c_{l*}: last chord of the maximal sticky chain
  bool is_top = false;
  bool is_short = false;
  bool is_sticky_child = false;
  bool is_sticky_parent = false;
  std::vector<int> same_end_descendants;  // ascending index = outer to inner
  int same_end_child = -1;                // outermost same-end descendant
  int outermost_ending_at_tail = -1;      // outermost chord whose head is this tail
  std::vector<int> head_to_tail_successors;  // chords starting at this head
};

// Noncrossing chords over a marker set. Markers are an arbitrary finite
// set of positive integers; the standard case is {1..n}.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  ChordDiagram(IndexSet markers, std::vector<Chord> chords);
  static ChordDiagram standard(int n, std::vector<Chord> chords);

  const IndexSet& markers() const { return markers_; }
  int n() const { return markers_.max(); }
  int k() const { return static_cast<int>(chords_.size()); }
  const std::vector<Chord>& chords() const { return chords_; }
  const Chord& chord(int idx) const { return chords_.at(static_cast<std::size_t>(idx)); }

  bool operator==(const ChordDiagram& o) const = default;
  // Lexicographic by chord list, then by marker set.
  bool operator<(const ChordDiagram& o) const {
    if (chords_ != o.chords_) return chords_ < o.chords_;
    return markers_.elements() < o.markers_.elements();
  }

  std::vector<ChordStats> stats() const;
  std::vector<int> top_chords() const;
  // Index of the chord with tail segment (i, i+1), or -1.
  int chord_starting_at(int i) const;
  // Markers used by some chord quadruple.
  std::vector<int> used_markers() const;

  // Sub-diagram of the chords whose four markers lie in the subset.
  ChordDiagram induced(const IndexSet& sub_markers) const;
  // Removes an unused marker (not max) from the marker set.
  ChordDiagram strip_marker(int h) const;

  // Product of 5-cycles (T_l U_l V_l W_l n).
  DecoratedPermutation to_permutation() const;
  // Product of 2-cycles and 3-cycles read off the generation algorithm.
  DecoratedPermutation algorithmic_permutation() const;

  std::string to_text() const;  // "n=14; 1-11, 3-6, 8-10"
  std::string to_json() const;
  static ChordDiagram from_text(const std::string& text);
  static ChordDiagram from_json(const std::string& text);

 private:
  void validate() const;

  IndexSet markers_;
  std::vector<Chord> chords_;  // sorted lexicographically by (i, j)
};

// One factor of the algorithmic permutation word, tagged by its origin so
// the codimension-one boundary permutations can edit it.
struct SigmaFactor {
  enum Kind { kTail2, kHead2, kHead3 };
  std::vector<int> cycle;
  int chord = -1;
  Kind kind = kTail2;
};
// Word of 2-cycles (endpoint order) followed by 3-cycles (first head
// rightmost); composing rightmost-first gives the algorithmic permutation.
std::vector<SigmaFactor> sigma_word(const ChordDiagram& diagram);
DecoratedPermutation compose_sigma_word(const IndexSet& domain,
                                        const std::vector<SigmaFactor>& word);

// All diagrams on {1..n} with k chords, lexicographic; empty when k > n-4.
std::vector<ChordDiagram> enumerate_diagrams(int n, int k);
// (1/(n-3)) C(n-3, k+1) C(n-3, k)
long diagram_count_formula(int n, int k);

// Pair of noncrossing lattice walks in a k x (n-k-4) rectangle, stored by
// the positions (within the n-4 steps) of the vertical steps.
struct LatticeWalkPair {
  int n = 0;
  int k = 0;
  std::vector<int> a_vertical;  // W_A, weakly above
  std::vector<int> b_vertical;  // W_B
  bool operator==(const LatticeWalkPair&) const = default;
};

std::vector<LatticeWalkPair> enumerate_walks(int n, int k);
ChordDiagram walks_to_diagram(const LatticeWalkPair& walks);
LatticeWalkPair diagram_to_walks(const ChordDiagram& diagram);

// Young diagram with rows labeled by tails and columns by the remaining
// markers in descending order; filling uses '+' and 'o'.
struct OplusDiagram {
  int n = 0;
  std::vector<int> row_labels;  // ascending tails
  std::vector<int> col_labels;  // descending non-tail markers (row 1 width)
  std::vector<std::string> filling;
  bool operator==(const OplusDiagram&) const = default;
  std::string str() const;
};

OplusDiagram diagram_to_oplus(const ChordDiagram& diagram);
// Checks rules (a)-(d) for a BCFW oplus-diagram.
bool oplus_is_valid(const OplusDiagram& oplus);
// Decorated permutation of the pipe dream obtained from the diagram.
DecoratedPermutation oplus_to_permutation(const OplusDiagram& oplus);

}  // namespace bcfw
