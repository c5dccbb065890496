#include <doctest.h>

#include "bcfw/inverse.hpp"
#include "bcfw/prng.hpp"

using namespace bcfw;

TEST_CASE("intersection vector recovers a known combination") {
  // k = 1: Y spans one row equal to 2 Z_1 + 3 Z_2 + 5 Z_3 + 7 Z_4 + 11 Z_5.
  PositiveZ z = z_panel(8, 1, 1, 0).front();
  std::vector<Rat> coeff = {2, 3, 5, 7, 11};
  RationalMatrix y(IndexSet{1}, IndexSet::interval(1, 5));
  std::vector<std::vector<Rat>> rows;
  for (int m = 1; m <= 5; ++m) {
    std::vector<Rat> r;
    for (int c = 1; c <= 5; ++c) r.push_back(z.entry(m, c));
    rows.push_back(r);
  }
  for (int c = 1; c <= 5; ++c) {
    Rat v = 0;
    for (int m = 0; m < 5; ++m) v += coeff[static_cast<std::size_t>(m)] * rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(c - 1)];
    y.set(1, c, v);
  }
  IntersectionResult res = intersection_vector(y, rows);
  // Coefficients are proportional to (2,3,5,7,11).
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK(res.coefficients[static_cast<std::size_t>(a)] * coeff[static_cast<std::size_t>(b)] ==
            res.coefficients[static_cast<std::size_t>(b)] * coeff[static_cast<std::size_t>(a)]);
  CHECK(y.row_span_contains(res.vector_in_span));
}

TEST_CASE("invert_point reconstructs sampled points exactly") {
  for (int k = 0; k <= 3; ++k)
    for (const ChordDiagram& d : enumerate_diagrams(7, k)) {
      PositiveZ z = z_panel(7, k, 1, 5).front();
      RationalMatrix c0 = sample_cell(d, 17);
      RationalMatrix c1 = invert_point(d, amap(c0, z), z);
      // Row-wise positive proportionality, exact.
      for (int l = 0; l < k; ++l) {
        Rat beta = c0.at(l + 1, d.chord(l).i + 1);
        CHECK(sgn(beta) > 0);
        for (std::size_t col = 0; col < c0.col_count(); ++col)
          CHECK(c0.at_pos(static_cast<std::size_t>(l), col) ==
                beta * c1.at_pos(static_cast<std::size_t>(l), col));
      }
    }
}

TEST_CASE("wrong cell rejects a generic point") {
  ChordDiagram a = ChordDiagram::standard(7, {{1, 4}});
  ChordDiagram b = ChordDiagram::standard(7, {{2, 4}});
  PositiveZ z = z_panel(7, 1, 1, 9).front();
  RationalMatrix y = amap(sample_cell(a, 2), z);
  CHECK_THROWS_AS(invert_point(b, y, z), std::domain_error);
}

TEST_CASE("identify_cell finds the generator and only it") {
  for (int k = 0; k <= 2; ++k) {
    PositiveZ z = z_panel(6, k, 1, 1).front();
    for (const ChordDiagram& d : enumerate_diagrams(6, k)) {
      RationalMatrix y = amap(sample_cell(d, 23), z);
      auto hit = identify_cell(y, z, 6, k);
      REQUIRE(hit.has_value());
      CHECK(*hit == d);
    }
    // k = 0 always lands in the unique empty diagram.
    if (k == 0) {
      RationalMatrix y0 = amap(RationalMatrix(IndexSet{}, IndexSet::interval(1, 6)), z);
      CHECK(identify_cell(y0, z, 6, 0).has_value());
    }
  }
}

TEST_CASE("reconstruction trace records five coefficients per chord") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  PositiveZ z = z_panel(8, 3, 1, 2).front();
  ReconstructionTrace trace;
  invert_point(d, amap(sample_cell(d, 31), z), z, &trace);
  REQUIRE(trace.rows.size() == 3);
  for (const auto& row : trace.rows) CHECK(row.coefficients.size() == 5);
}
