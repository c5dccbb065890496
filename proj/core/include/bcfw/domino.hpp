#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcfw/chords.hpp"
#include "bcfw/matrix.hpp"

namespace bcfw {

// Where the five (or six) nonzero entries of each row live.
struct DominoTemplate {
  struct Row {
    int alpha_pos = 0;
    int beta_pos = 0;
    int gamma_pos = 0;
    int delta_pos = 0;
    int epsilon_pos = -1;        // n for top chords, -1 otherwise
    int inherit_alpha_pos = -1;  // parent tail for children, -1 for top
    int inherit_beta_pos = -1;
    std::vector<int> support;
  };
  std::vector<Row> rows;
};

DominoTemplate domino_template(const ChordDiagram& diagram);

// The 5k domino variables of a point, in the row normalization beta = 1.
struct DominoAssignment {
  std::vector<Rat> alpha, beta, gamma, delta, epsilon;
  std::string to_json() const;  // keyed by 1-based chord index
  static DominoAssignment from_json(const std::string& text);
};

// The 4k positive construction parameters s_l, u_l, v_l, w_l.
struct ConstructionParams {
  std::vector<Rat> s, u, v, w;
};

// Result of matching a matrix against the template and the six sign rules.
// rule 0 flags structural mismatches (support or inherited-domino shape).
struct SignRuleReport {
  bool ok = false;
  int rule = 0;
  int chord = -1;
  int other_chord = -1;
  std::string message;
  DominoAssignment assignment;
};

// The recursive generation algorithm; all parameters positive gives an
// interior point of the BCFW cell of the diagram.
RationalMatrix construct_matrix(const ChordDiagram& diagram, const ConstructionParams& params);

// The variant that handles top chords left to right. Parametrizes the same
// cell; the nonzero Pluecker pattern agrees with construct_matrix.
RationalMatrix construct_matrix_rightwards(const ChordDiagram& diagram,
                                           const ConstructionParams& params);

// Extracts the domino variables (unique up to positive row scaling) and
// verifies the six sign rules plus the 2x2-minor inequalities.
SignRuleReport check_sign_rules(const RationalMatrix& matrix, const ChordDiagram& diagram);

// Direct template instantiation from given variables.
RationalMatrix matrix_from_assignment(const ChordDiagram& diagram, const DominoAssignment& a);

// Seeded positive parameters and the matrix they generate.
ConstructionParams sample_params(const ChordDiagram& diagram, std::uint64_t seed);
RationalMatrix sample_cell(const ChordDiagram& diagram, std::uint64_t seed);

// Rejection-samples a sign-rule-satisfying assignment without going through
// construct_matrix; used to test that the template plus sign rules alone
// already land in the cell.
std::optional<DominoAssignment> random_assignment(const ChordDiagram& diagram, std::uint64_t seed,
                                                  int max_tries = 1000);

// Exact inverse of construct_matrix on the cell: the unique positive
// parameters whose construction is row-equivalent to the given point.
// Throws std::domain_error when the point is not in the cell's interior.
ConstructionParams recover_params(const ChordDiagram& diagram, const RationalMatrix& point);

// recover_params plus the x_j(w) split values consumed while undoing the
// recursion, one (marker, w) pair per split.
struct RecoverTrace {
  ConstructionParams params;
  std::vector<std::pair<int, Rat>> splits;
};
RecoverTrace recover_params_traced(const ChordDiagram& diagram, const RationalMatrix& point);

}  // namespace bcfw
