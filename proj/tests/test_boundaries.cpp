#include <doctest.h>

#include <algorithm>

#include "bcfw/ampl.hpp"
#include "bcfw/boundaries.hpp"
#include "bcfw/prng.hpp"

using namespace bcfw;

namespace {
bool has(const std::vector<VarElement>& v, VarElement e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}
}  // namespace

TEST_CASE("single chord ledger") {
  ChordDiagram d = ChordDiagram::standard(7, {{2, 4}});
  VarSets v = var_set(d);
  CHECK(v.var.size() == 5);
  CHECK(v.var1.size() == 5);
  CHECK(v.var_tilde.size() == 5);
  CHECK(has(v.var, {VarKind::Alpha, 0, -1}));
  CHECK(has(v.var, {VarKind::EpsHat, 0, -1}));
}

TEST_CASE("eta and theta exclusions hold on every small diagram") {
  for (int n = 6; n <= 8; ++n)
    for (int k = 0; k <= n - 4; ++k)
      for (const ChordDiagram& d : enumerate_diagrams(n, k)) {
        VarSets v = var_set(d);
        for (const VarElement& e : v.var) {
          if (e.kind == VarKind::Eta) {
            CHECK(!has(v.var, {VarKind::DeltaHat, e.chord, -1}));
            CHECK(!has(v.var, {VarKind::GammaHat, e.other, -1}));
          }
          if (e.kind == VarKind::Theta) {
            CHECK(!has(v.var, {VarKind::GammaHat, e.chord, -1}));
            CHECK(!has(v.var, {VarKind::Beta, e.other, -1}));
          }
        }
        // Var~ counts all 5k hatted variables plus every eta/theta pair.
        auto st = d.stats();
        std::size_t minors = 0;
        for (const auto& s : st) minors += s.same_end_descendants.size() + s.head_to_tail_successors.size();
        CHECK(v.var_tilde.size() == 5 * static_cast<std::size_t>(k) + minors);
      }
}

TEST_CASE("specific shift cases from the definition") {
  // Unobstructed right head shift pairs gamma with delta.
  ChordDiagram d = ChordDiagram::standard(8, {{1, 4}});
  auto sh = shift(d, 0, ShiftKind::HeadRight);
  REQUIRE(sh.has_value());
  CHECK(sh->target == ChordDiagram::standard(8, {{1, 5}}));
  // Short chord right tail shift with a same-end ancestor rolls its head.
  ChordDiagram roll = ChordDiagram::standard(9, {{1, 4}, {2, 4}});
  auto sh2 = shift(roll, 1, ShiftKind::TailRight);
  REQUIRE(sh2.has_value());
  CHECK(sh2->target == ChordDiagram::standard(9, {{1, 3}, {3, 5}}));
  CHECK(sh2->case_name == "tail-right-short-roll");
  // No clause applies: right tail shift of a chord with a sticky child.
  ChordDiagram sticky = ChordDiagram::standard(9, {{1, 6}, {2, 4}});
  CHECK(!shift(sticky, 0, ShiftKind::TailRight).has_value());
  // Every defined shift keeps k and yields a valid diagram (validated by
  // the constructor) on an exhaustive small scan.
  for (int k = 1; k <= 4; ++k)
    for (const ChordDiagram& dd : enumerate_diagrams(8, k))
      for (int l = 0; l < k; ++l)
        for (ShiftKind kind : {ShiftKind::TailLeft, ShiftKind::TailRight, ShiftKind::HeadLeft,
                               ShiftKind::HeadRight})
          if (auto s = shift(dd, l, kind)) CHECK(s->target.k() == k);
}

TEST_CASE("boundary permutation edits") {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 4}});
  // gamma-hat: the head 3-cycle collapses to (a+1, b+1).
  DecoratedPermutation g = boundary_permutation(d, {VarKind::GammaHat, 0, -1});
  DecoratedPermutation full = d.algorithmic_permutation();
  CHECK(!g.same_mapping(full));
  CHECK(g.anti_excedances().size() == 1);
  // Beta of a sticky child is out of scope.
  ChordDiagram sticky = ChordDiagram::standard(9, {{1, 6}, {2, 4}});
  CHECK_THROWS(boundary_permutation(sticky, {VarKind::Beta, 1, -1}));
}

TEST_CASE("pairing examples from the boundary lemma") {
  // Unobstructed head-right: gamma of (1,4) pairs with delta of (1,5).
  ChordDiagram d = ChordDiagram::standard(8, {{1, 4}});
  auto classes = pair_boundaries(d);
  bool found_gamma = false, found_eps = false;
  for (const auto& bc : classes) {
    if (bc.star == VarElement{VarKind::GammaHat, 0, -1}) {
      found_gamma = true;
      REQUIRE(!bc.is_sa);
      CHECK(*bc.partner == ChordDiagram::standard(8, {{1, 5}}));
      CHECK(*bc.partner_star == VarElement{VarKind::DeltaHat, 0, -1});
    }
    if (bc.star == VarElement{VarKind::EpsHat, 0, -1}) {
      found_eps = true;
      CHECK(bc.is_sa);
    }
  }
  CHECK(found_gamma);
  CHECK(found_eps);
  // Short alpha with a chord starting at its head pairs into eta.
  ChordDiagram h2t = ChordDiagram::standard(9, {{1, 3}, {3, 5}});
  for (const auto& bc : pair_boundaries(h2t))
    if (bc.star == VarElement{VarKind::Alpha, 0, -1}) {
      REQUIRE(!bc.is_sa);
      CHECK(bc.partner_star->kind == VarKind::Eta);
      CHECK(boundary_permutation(h2t, bc.star)
                .same_mapping(boundary_permutation(*bc.partner, *bc.partner_star)));
    }
}

TEST_CASE("sa witnesses expose the boundary twistor equality case") {
  ChordDiagram d = ChordDiagram::standard(8, {{2, 5}});
  RationalMatrix w = sa_witness(d, {VarKind::EpsHat, 0, -1}, 0);
  auto hit = in_S_partial_A(w);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 2);
  CHECK(hit->second == 5);
  // The matching boundary twistor of the image point vanishes.
  PositiveZ z = z_panel(8, 1, 1, 4).front();
  RationalMatrix y = amap(w, z);
  CHECK(twistor(y, z, {2, 3, 5, 6}) == 0);
  CHECK(w.all_plueckers_nonnegative());
}
