#include <doctest.h>

#include "bcfw/domino.hpp"
#include "bcfw/prng.hpp"

using namespace bcfw;

TEST_CASE("template support collapses for sticky children") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  DominoTemplate tpl = domino_template(d);
  CHECK(tpl.rows[0].support == std::vector<int>{1, 2, 6, 7, 8});
  CHECK(tpl.rows[1].support == std::vector<int>{1, 2, 3, 4, 5});  // sticky overlap: five entries
  CHECK(tpl.rows[2].support == std::vector<int>{1, 2, 4, 5, 6, 7});
}

TEST_CASE("single chord row reads (u 1 v wv 0 s)") {
  ChordDiagram d = ChordDiagram::standard(6, {{1, 3}});
  ConstructionParams p{{rat_of(5)}, {rat_of(2)}, {rat_of(3)}, {rat_of(7)}};
  RationalMatrix m = construct_matrix(d, p);
  CHECK(m.at(1, 1) == 2);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(1, 3) == 3);
  CHECK(m.at(1, 4) == 21);
  CHECK(m.at(1, 5) == 0);
  CHECK(m.at(1, 6) == 5);
  // Parameters read off directly by the recovery.
  ConstructionParams q = recover_params(d, m);
  CHECK(q.s == p.s);
  CHECK(q.u == p.u);
  CHECK(q.v == p.v);
  CHECK(q.w == p.w);
}

TEST_CASE("k = 0 constructions return the empty matrix") {
  ChordDiagram d = ChordDiagram::standard(6, {});
  ConstructionParams p;
  CHECK(construct_matrix(d, p).row_count() == 0);
  CHECK(construct_matrix_rightwards(d, p).row_count() == 0);
}

TEST_CASE("check_sign_rules accepts construction output and reports violations") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  RationalMatrix m = sample_cell(d, 3);
  SignRuleReport rep = check_sign_rules(m, d);
  REQUIRE(rep.ok);
  // Flipping one gamma sign fails with rule 2 cited.
  DominoAssignment bad = rep.assignment;
  bad.gamma[0] = -bad.gamma[0];
  SignRuleReport flipped = check_sign_rules(matrix_from_assignment(d, bad), d);
  CHECK(!flipped.ok);
  CHECK(flipped.rule == 2);
  CHECK(flipped.chord == 0);
  // An entry off the support is a structural violation.
  RationalMatrix off = m;
  off.set(1, 4, rat_of(1));
  CHECK(check_sign_rules(off, d).rule == 0);
  // Row scaling (including negative scales) does not change the verdict.
  CHECK(check_sign_rules(m.scale_row(1, rat_of(-7, 3)), d).ok);
}

TEST_CASE("sampling is deterministic and pattern stable") {
  ChordDiagram d = ChordDiagram::standard(7, {{1, 4}, {2, 4}});
  CHECK(sample_cell(d, 9) == sample_cell(d, 9));
  CHECK(sample_cell(d, 9).nonzero_pluecker_pattern() == sample_cell(d, 10).nonzero_pluecker_pattern());
  CHECK(check_sign_rules(sample_cell(d, 11), d).ok);
}

TEST_CASE("direct assignments land in the same cell") {
  for (int k = 0; k <= 3; ++k)
    for (const ChordDiagram& d : enumerate_diagrams(7, k)) {
      auto a = random_assignment(d, 21);
      REQUIRE(a.has_value());
      RationalMatrix m = matrix_from_assignment(d, *a);
      CHECK(m.all_plueckers_nonnegative());
      CHECK(m.nonzero_pluecker_pattern() == sample_cell(d, 1).nonzero_pluecker_pattern());
    }
}

TEST_CASE("recovery roundtrips exactly and rejects outside points") {
  for (int k = 0; k <= 3; ++k)
    for (const ChordDiagram& d : enumerate_diagrams(7, k))
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        ConstructionParams p = sample_params(d, seed);
        RationalMatrix m = construct_matrix(d, p);
        ConstructionParams q = recover_params(d, m);
        CHECK(p.s == q.s);
        CHECK(p.u == q.u);
        CHECK(p.v == q.v);
        CHECK(p.w == q.w);
        // Row scaling does not change the recovered parameters.
        if (d.k() > 0) {
          ConstructionParams r = recover_params(d, m.scale_row(1, rat_of(3, 2)));
          CHECK(r.s == p.s);
          CHECK(r.w == p.w);
        }
      }
  // A point of one cell is rejected by a different cell's recovery.
  ChordDiagram a = ChordDiagram::standard(7, {{1, 3}});
  ChordDiagram b = ChordDiagram::standard(7, {{2, 4}});
  CHECK_THROWS_AS(recover_params(b, sample_cell(a, 2)), std::domain_error);
}

TEST_CASE("the split multiple equals the sum of same-end w parameters") {
  // Two top chords where the first carries a same-end child: undoing the
  // construction consumes x_j(w) with w the sum of the matching w values.
  ChordDiagram d = ChordDiagram::standard(10, {{1, 4}, {2, 4}, {5, 8}});
  ConstructionParams p = sample_params(d, 33);
  RecoverTrace trace = recover_params_traced(d, construct_matrix(d, p));
  REQUIRE(trace.splits.size() == 1);
  CHECK(trace.splits[0].first == 4);
  CHECK(trace.splits[0].second == p.w[0] + p.w[1]);
}

TEST_CASE("rightwards algorithm parametrizes the same cell") {
  for (int k = 0; k <= 3; ++k)
    for (const ChordDiagram& d : enumerate_diagrams(7, k)) {
      ConstructionParams p = sample_params(d, 5);
      RationalMatrix right = construct_matrix_rightwards(d, p);
      CHECK(right.all_plueckers_nonnegative());
      CHECK(right.nonzero_pluecker_pattern() == construct_matrix(d, p).nonzero_pluecker_pattern());
      if (d.k() > 0) {
        // A single point of the cell: recovery then reconstruction lands on
        // the same span.
        ConstructionParams q = recover_params(d, right);
        CHECK(construct_matrix(d, q).same_row_span(right));
      }
    }
}

TEST_CASE("assignment json roundtrip") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  DominoAssignment a = check_sign_rules(sample_cell(d, 7), d).assignment;
  DominoAssignment b = DominoAssignment::from_json(a.to_json());
  CHECK(a.alpha == b.alpha);
  CHECK(a.beta == b.beta);
  CHECK(a.gamma == b.gamma);
  CHECK(a.delta == b.delta);
  CHECK(a.epsilon == b.epsilon);
}
