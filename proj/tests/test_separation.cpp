#include <doctest.h>

#include "bcfw/separation.hpp"

using namespace bcfw;

TEST_CASE("case A: trivial diagram against one chord") {
  ChordDiagram a = ChordDiagram::standard(6, {{1, 3}});
  ChordDiagram b = ChordDiagram::standard(6, {});
  Separator sep = separator(a, b);
  CHECK(sep.functionary == Functionary::twistor({1, 2, 3, 6}));
  CHECK(sep.sign_a == -1);
  CHECK(sep.sign_b == 1);
  CHECK(verify_separator(a, b, sep, 0, 3, 2).ok);
}

TEST_CASE("case D: different last chords give the quadratic") {
  ChordDiagram a = ChordDiagram::standard(8, {{2, 6}});
  ChordDiagram b = ChordDiagram::standard(8, {{4, 6}});
  Separator sep = separator(a, b);
  CHECK(sep.functionary == favorite(2, 3, 4, 5, 6, 7, 8));
  CHECK(sep.sign_a == -1);
  CHECK(verify_separator(a, b, sep, 1, 3, 2).ok);
}

TEST_CASE("case B: a common dead marker is stripped without changing the functionary") {
  ChordDiagram a6 = ChordDiagram::standard(6, {{1, 3}});
  ChordDiagram b6 = ChordDiagram::standard(6, {{2, 4}});
  ChordDiagram a7 = ChordDiagram::standard(7, {{1, 3}});
  ChordDiagram b7 = ChordDiagram::standard(7, {{2, 4}});
  // Marker 5 is dead in both seven-marker diagrams (6 is used by b7's head).
  Separator small = separator(a6, b6);
  Separator lifted = separator(a7, b7);
  CHECK(small.sign_a == lifted.sign_a);
  // After stripping, the six-marker pair uses labels {1,2,3,4,6,7}; the
  // separating functionary of the lifted pair coincides syntactically with
  // the functionary computed on the stripped marker set.
  ChordDiagram a_str = a7.strip_marker(5);
  ChordDiagram b_str = b7.strip_marker(5);
  CHECK(separator(a_str, b_str).functionary == lifted.functionary);
  CHECK(verify_separator(a7, b7, lifted, 2, 3, 2).ok);
}

TEST_CASE("promotion warmup formula") {
  Functionary f = Functionary::twistor({3, 4, 5, 7});
  Functionary promoted = promote_case_E(f, 1, 7);
  Functionary expect = Functionary::twistor({1, 2, 5, 6})
                           .times(Functionary::twistor({3, 4, 5, 7}))
                           .plus(Functionary::twistor({1, 2, 5, 7})
                                     .times(Functionary::twistor({3, 4, 5, 6}))
                                     .negated());
  CHECK(promoted == expect);
}

TEST_CASE("promotions preserve purity and track degree") {
  Functionary f = favorite(2, 3, 4, 5, 6, 7, 8);
  REQUIRE(f.is_pure());
  int d7 = f.multiplicity(7);
  int d8 = f.multiplicity(8);
  Functionary e = promote_case_E(f, 1, 8);
  CHECK(e.is_pure());
  CHECK(e.degree() == f.degree() + d7 + d8);
  // Multiplicities move as the rewriting dictates.
  CHECK(e.multiplicity(1) == d7 + d8);
  CHECK(e.multiplicity(8) == d8);
  // A functionary without the last two indices is untouched by case E.
  Functionary g = Functionary::twistor({2, 3, 4, 5});
  CHECK(promote_case_E(g, 1, 8) == g);
  // Case F only rewrites occurrences of i+1.
  Functionary h = Functionary::twistor({2, 3, 4, 8});
  Functionary hf = promote_case_F(h, 4, 8);
  CHECK(hf.is_pure());
  CHECK(hf.degree() == 2);
  CHECK(promote_case_F(g, 5, 8) == g);
}

TEST_CASE("mixed k pairs are separated") {
  ChordDiagram a = ChordDiagram::standard(7, {{1, 4}, {2, 4}});
  ChordDiagram b = ChordDiagram::standard(7, {{3, 5}});
  Separator sep = separator(a, b);
  CHECK(!sep.functionary.is_zero());
  CHECK(sep.functionary.is_pure());
  CHECK(verify_separator(a, b, sep, 3, 3, 2).ok);
  CHECK_THROWS(separator(a, a));
}
