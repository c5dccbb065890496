#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcfw/ampl.hpp"
#include "bcfw/chords.hpp"
#include "bcfw/domino.hpp"

namespace bcfw {

// Intersection of the row span of Y with the span of five given rows, all
// in R^(k+4). When at least one of the five stacked determinants is
// nonzero the intersection is one-dimensional, spanned by
// sum_j (-1)^(j-1) <Y, rows minus j> row_j. Throws when degenerate.
struct IntersectionResult {
  std::vector<Rat> coefficients;   // five alternating-sign determinants
  std::vector<Rat> vector_in_span; // the spanned vector in R^(k+4)
};
IntersectionResult intersection_vector(const RationalMatrix& y,
                                       const std::vector<std::vector<Rat>>& five_rows);

// Per-row record of the twistor solve, for inspection and tests.
struct ReconstructionTrace {
  struct Row {
    int chord = 0;
    std::vector<Rat> coefficients;
  };
  std::vector<Row> rows;
};

// Reconstructs the unique domino-form preimage of Y under the cell of the
// diagram, solving rows in parent-to-child order; child rows use the
// parent's tail combination as the fifth basis vector. Throws
// std::domain_error when Y is not in the interior image of this cell.
RationalMatrix invert_point(const ChordDiagram& diagram, const RationalMatrix& y,
                            const PositiveZ& z, ReconstructionTrace* trace = nullptr);

// Scans every cell of Gr(k, n); returns the unique accepting diagram, or
// nullopt when no cell accepts (boundary point). Two acceptors would
// contradict separation and abort via std::logic_error.
std::optional<ChordDiagram> identify_cell(const RationalMatrix& y, const PositiveZ& z, int n,
                                          int k);

}  // namespace bcfw
