#include <doctest.h>

#include <algorithm>

#include "bcfw/chords.hpp"

using namespace bcfw;

TEST_CASE("diagram validation rejects the forbidden configurations") {
  CHECK_NOTHROW(ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}}));
  CHECK_THROWS(ChordDiagram::standard(6, {{1, 2}}));          // head next to tail
  CHECK_THROWS(ChordDiagram::standard(6, {{1, 5}}));          // ends after n-1
  CHECK_THROWS(ChordDiagram::standard(8, {{1, 3}, {2, 4}}));  // crossing
  CHECK_THROWS(ChordDiagram::standard(8, {{1, 3}, {1, 4}}));  // same start
}

TEST_CASE("enumeration counts and edge cases") {
  CHECK(enumerate_diagrams(5, 1).size() == 1);
  CHECK(enumerate_diagrams(5, 1).front() == ChordDiagram::standard(5, {{1, 3}}));
  CHECK(enumerate_diagrams(8, 2).size() == 20);
  CHECK(enumerate_diagrams(9, 6).empty());  // k > n-4
  for (int n = 4; n <= 9; ++n)
    for (int k = 0; k <= n - 4; ++k)
      CHECK(static_cast<long>(enumerate_diagrams(n, k).size()) == diagram_count_formula(n, k));
  // The enumeration output revalidates: the constructor enforces the rules.
  auto all = enumerate_diagrams(8, 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("stats capture the chord relations") {
  ChordDiagram d = ChordDiagram::standard(14, {{1, 11}, {3, 6}, {8, 10}});
  auto st = d.stats();
  CHECK(st[0].is_top);
  CHECK(st[0].below == 2);
  CHECK(st[0].behind == 2);
  CHECK(st[1].parent == 0);
  CHECK(st[1].beyond == 0);
  CHECK(st[2].parent == 0);
  CHECK(st[2].beyond == 1);
  CHECK(st[2].behind == 0);
  CHECK(st[1].is_short == false);
  // Sticky chain endpoints on a chained example.
  ChordDiagram chain = ChordDiagram::standard(10, {{1, 7}, {2, 6}, {3, 5}});
  auto cst = chain.stats();
  CHECK(cst[0].sticky_last == 2);
  CHECK(cst[2].sticky_first == 0);
  CHECK(cst[1].is_sticky_child);
  CHECK(cst[1].is_sticky_parent);
}

TEST_CASE("permutation equals the algorithmic permutation on small scans") {
  for (int n = 4; n <= 8; ++n)
    for (int k = 0; k <= n - 4; ++k)
      for (const ChordDiagram& d : enumerate_diagrams(n, k)) {
        CHECK(d.to_permutation().same_mapping(d.algorithmic_permutation()));
        CHECK(static_cast<int>(d.to_permutation().anti_excedances().size()) == k);
      }
}

TEST_CASE("sticky algorithmic permutation uses the chain endpoint") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  auto word = sigma_word(d);
  // Leftmost transposition is (1 3) because the first chord has a sticky
  // child.
  REQUIRE(word.front().kind == SigmaFactor::kTail2);
  CHECK(word.front().cycle == std::vector<int>{1, 3});
}

TEST_CASE("walk bijection") {
  LatticeWalkPair w{14, 3, {2, 8, 10}, {1, 3, 8}};
  ChordDiagram d = walks_to_diagram(w);
  CHECK(d == ChordDiagram::standard(14, {{1, 11}, {3, 6}, {8, 10}}));
  CHECK(diagram_to_walks(d) == w);
  CHECK_THROWS(walks_to_diagram(LatticeWalkPair{14, 3, {1, 3, 8}, {2, 8, 10}}));  // crossing
  CHECK(walks_to_diagram(LatticeWalkPair{9, 0, {}, {}}).k() == 0);
  // Roundtrip identity over all of LW_{8,2}, twenty on each side.
  auto walks = enumerate_walks(8, 2);
  CHECK(walks.size() == 20);
  for (const LatticeWalkPair& ww : walks) CHECK(diagram_to_walks(walks_to_diagram(ww)) == ww);
}

TEST_CASE("oplus diagrams validate and flow to the same permutation") {
  for (int k = 0; k <= 4; ++k)
    for (const ChordDiagram& d : enumerate_diagrams(8, k)) {
      OplusDiagram op = diagram_to_oplus(d);
      CHECK(oplus_is_valid(op));
      CHECK(oplus_to_permutation(op).same_mapping(d.to_permutation()));
      CHECK(oplus_to_permutation(op).white_fixed().empty());
    }
  // A filling with a hole in the wrong place is rejected.
  ChordDiagram d = ChordDiagram::standard(8, {{1, 4}});
  OplusDiagram op = diagram_to_oplus(d);
  op.filling[0][1] = '+';
  CHECK(!oplus_is_valid(op));
}

TEST_CASE("text and json forms") {
  ChordDiagram d = ChordDiagram::standard(14, {{1, 11}, {3, 6}, {8, 10}});
  CHECK(d.to_text() == "n=14; 1-11, 3-6, 8-10");
  CHECK(ChordDiagram::from_text(d.to_text()) == d);
  CHECK(ChordDiagram::from_json(d.to_json()) == d);
  CHECK(ChordDiagram::from_json("{\"n\":14,\"chords\":[[1,11],[3,6],[8,10]]}") == d);
}

TEST_CASE("induced subdiagrams and marker stripping") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  ChordDiagram desc = d.induced(d.markers().slice(2, 8));
  CHECK(desc.k() == 2);
  CHECK_THROWS(d.strip_marker(2));  // used
  ChordDiagram e = ChordDiagram::standard(8, {{1, 3}});
  ChordDiagram stripped = e.strip_marker(6);
  CHECK(stripped.markers().size() == 7);
  CHECK(stripped.to_permutation().apply(6) == 6);
}
