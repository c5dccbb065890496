#include <doctest.h>

#include "bcfw/ampl.hpp"
#include "bcfw/domino.hpp"
#include "bcfw/prng.hpp"

using namespace bcfw;

TEST_CASE("vandermonde Z is totally positive and deterministic") {
  std::vector<Rat> nodes;
  for (int i = 1; i <= 5; ++i) nodes.push_back(Rat(i));
  PositiveZ z = make_positive_Z(5, 1, nodes);
  CHECK(z.mat().det() > 0);
  CHECK_THROWS(make_positive_Z(5, 1, {Rat(1), Rat(1), Rat(2), Rat(3), Rat(4)}));
  auto p1 = z_panel(8, 2, 3, 42);
  auto p2 = z_panel(8, 2, 3, 42);
  CHECK(p1[1].mat() == p2[1].mat());
  CHECK(p1[0].mat().at(3, 2) == 3);  // nodes 1..n on the first panel entry
}

TEST_CASE("twistor coordinates: order, repetition, k = 0") {
  PositiveZ z = z_panel(8, 1, 1, 0).front();
  ChordDiagram d = ChordDiagram::standard(8, {{2, 5}});
  RationalMatrix y = amap(sample_cell(d, 4), z);
  CHECK(twistor(y, z, {1, 3, 7, 5}) == -twistor(y, z, {1, 3, 5, 7}));
  CHECK(twistor(y, z, {2, 4, 6, 6}) == 0);
  // k = 0: the twistor is the plain Z minor.
  PositiveZ z0 = z_panel(6, 0, 1, 0).front();
  RationalMatrix y0(IndexSet{}, IndexSet::interval(1, 4));
  CHECK(twistor(y0, z0, {1, 2, 3, 4}) ==
        z0.mat().restrict_rows(IndexSet{1, 2, 3, 4}).det());
}

TEST_CASE("cauchy binet expansion is the twistor") {
  // Independent oracle: sum over k-subsets J of s(J, I) P_J(C) <Z_{I u J}>.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    int n = 7, k = 2;
    ChordDiagram d = enumerate_diagrams(n, k)[seed % 6];
    RationalMatrix c = sample_cell(d, seed);
    PositiveZ z = z_panel(n, k, 1, seed).front();
    RationalMatrix y = amap(c, z);
    for (const IndexSet& i_set : subsets_of_size(IndexSet::interval(1, n), 4)) {
      Rat expect = 0;
      std::vector<int> rest;
      for (int m = 1; m <= n; ++m)
        if (!i_set.contains(m)) rest.push_back(m);
      for (const IndexSet& j_set : subsets_of_size(IndexSet(rest), static_cast<std::size_t>(k))) {
        std::vector<int> uni = j_set.elements();
        for (int m : i_set) uni.push_back(m);
        Rat minor = z.mat().restrict_rows(IndexSet(uni)).det();
        expect += Rat(cauchy_binet_sign(j_set, i_set)) * c.pluecker(j_set) * minor;
      }
      std::array<int, 4> tuple{i_set.at(0), i_set.at(1), i_set.at(2), i_set.at(3)};
      CHECK(twistor(y, z, tuple) == expect);
    }
  }
}

TEST_CASE("favorite functionary and its dihedral identities") {
  Functionary f = favorite(1, 2, 4, 5, 7, 8, 9);
  Functionary expect = Functionary::parse_text("+1*<1 4 5 9>*<2 7 8 9> -1*<1 7 8 9>*<2 4 5 9>");
  CHECK(f == expect);
  CHECK(f.is_pure());
  CHECK(f.degree() == 2);
  CHECK(f.multiplicity(9) == 2);
  CHECK(f.multiplicity(1) == 1);
  // The six Pluecker-relation forms agree numerically on sampled points.
  int i = 1, i2 = 2, j = 3, j2 = 4, h = 5, h2 = 6, l = 7;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 7, k = 1;
    ChordDiagram d = enumerate_diagrams(n, k)[seed % 6];
    PositiveZ z = z_panel(n, k, 1, seed).front();
    RationalMatrix y = amap(sample_cell(d, seed), z);
    TwistorEvaluator ev(y, z);
    Rat base = ev.eval_functionary(favorite(i, i2, j, j2, h, h2, l));
    CHECK(base == -ev.eval_functionary(favorite(i, i2, h, h2, j, j2, l)));
    CHECK(base == ev.eval_functionary(favorite(j, j2, h, h2, i, i2, l)));
    CHECK(base == -ev.eval_functionary(favorite(h, h2, j, j2, i, i2, l)));
    CHECK(base == ev.eval_functionary(favorite(h, h2, i, i2, j, j2, l)));
    CHECK(base == -ev.eval_functionary(favorite(j, j2, i, i2, h, h2, l)));
  }
}

TEST_CASE("functionary canonical forms") {
  Functionary zero;
  CHECK(zero.is_zero());
  ChordDiagram d = ChordDiagram::standard(7, {{1, 3}});
  PositiveZ z = z_panel(7, 1, 1, 3).front();
  RationalMatrix y = amap(sample_cell(d, 0), z);
  CHECK(eval_functionary(zero, y, z) == 0);
  Functionary f = Functionary::twistor({3, 1, 2, 4});  // odd permutation
  CHECK(f.to_text() == "-1*<1 2 3 4>");
  CHECK(Functionary::twistor({1, 1, 2, 3}).is_zero());
  Functionary g = Functionary::parse_text(f.to_text());
  CHECK(f == g);
  CHECK(Functionary::from_json(f.to_json()) == f);
  // Adding the negation cancels exactly.
  CHECK(f.plus(f.negated()).is_zero());
}

TEST_CASE("boundary twistors vanish exactly on supported vectors") {
  // k = 1 row supported on {2,3,6,7}: in S_dA with witness (2, 6).
  RationalMatrix c(IndexSet{1}, IndexSet::interval(1, 8));
  c.set(1, 2, rat_of(1));
  c.set(1, 3, rat_of(2));
  c.set(1, 6, rat_of(3));
  c.set(1, 7, rat_of(4));
  auto witness = in_S_partial_A(c);
  REQUIRE(witness.has_value());
  CHECK(witness->first == 2);
  CHECK(witness->second == 6);
  PositiveZ z = z_panel(8, 1, 1, 5).front();
  RationalMatrix y = amap(c, z);
  CHECK(twistor(y, z, {2, 3, 6, 7}) == 0);
  // Wrap-around pairs also count.
  RationalMatrix w(IndexSet{1}, IndexSet::interval(1, 8));
  w.set(1, 1, rat_of(1));
  w.set(1, 4, rat_of(2));
  w.set(1, 5, rat_of(3));
  w.set(1, 8, rat_of(5));
  CHECK(in_S_partial_A(w).has_value());
  // A totally positive point is never on the boundary.
  CHECK(!in_S_partial_A(sample_positive_point(IndexSet::interval(1, 8), 2, 1)).has_value());
}

TEST_CASE("middle decomposition signatures at (7,1)") {
  MiddleDecompositionReport rep = check_middle_decomposition(7, 1, 0, 3, 2);
  CHECK(rep.ok);
  CHECK(rep.pieces == 4);  // pre, (0,1), and S_{j,7;0,0} for j = 2, 3
}
