#include "bcfw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "bcfw/ampl.hpp"
#include "bcfw/boundaries.hpp"
#include "bcfw/chords.hpp"
#include "bcfw/domino.hpp"
#include "bcfw/inverse.hpp"
#include "bcfw/prng.hpp"
#include "bcfw/separation.hpp"

namespace bcfw::verify {

namespace {

std::string diag_str(const ChordDiagram& d) { return d.to_text(); }

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  int threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& w : workers) w.join();
}

std::vector<ChordDiagram> all_cells(int n) {
  std::vector<ChordDiagram> out;
  for (int k = 0; k <= n - 4; ++k) {
    auto d = enumerate_diagrams(n, k);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

}  // namespace

SuiteResult counts(int n_max) {
  SuiteResult res{"counts"};
  for (int n = 4; n <= n_max; ++n)
    for (int k = 0; k <= n - 4; ++k) {
      long expected = diagram_count_formula(n, k);
      long got = static_cast<long>(enumerate_diagrams(n, k).size());
      std::ostringstream os;
      os << "count(" << n << "," << k << ") = " << got << ", formula " << expected;
      res.require(got == expected, os.str());
      long walks = static_cast<long>(enumerate_walks(n, k).size());
      res.require(walks == expected, "walk count mismatch at n=" + std::to_string(n) +
                                         " k=" + std::to_string(k));
    }
  return res;
}

SuiteResult permutation_coherence(int n_max) {
  SuiteResult res{"permutation-coherence"};
  for (int n = 4; n <= n_max; ++n)
    for (int k = 0; k <= n - 4; ++k)
      for (const ChordDiagram& d : enumerate_diagrams(n, k)) {
        DecoratedPermutation pi = d.to_permutation();
        DecoratedPermutation sigma = d.algorithmic_permutation();
        res.require(pi.same_mapping(sigma), "pi != sigma for " + diag_str(d));
        res.require(static_cast<int>(pi.anti_excedances().size()) == k,
                    "anti-excedance count != k for " + diag_str(d));
        OplusDiagram op = diagram_to_oplus(d);
        res.require(oplus_is_valid(op), "invalid oplus diagram for " + diag_str(d));
        DecoratedPermutation pipe = oplus_to_permutation(op);
        res.require(pi.same_mapping(pipe), "pipe dream permutation differs for " + diag_str(d));
        res.require(pipe.white_fixed().empty(), "white fixed point appeared for " + diag_str(d));
        LatticeWalkPair w = diagram_to_walks(d);
        res.require(walks_to_diagram(w) == d, "walk roundtrip failed for " + diag_str(d));
      }
  // Walk-side roundtrip: every noncrossing pair is hit exactly once.
  for (int n = 4; n <= std::min(n_max, 8); ++n)
    for (int k = 0; k <= n - 4; ++k)
      for (const LatticeWalkPair& w : enumerate_walks(n, k))
        res.require(diagram_to_walks(walks_to_diagram(w)) == w, "walk/diagram roundtrip failed");
  return res;
}

SuiteResult regressions() {
  SuiteResult res{"regressions"};
  // The running 14-marker, 3-chord example.
  ChordDiagram d3 = ChordDiagram::standard(14, {{1, 11}, {3, 6}, {8, 10}});
  {
    std::vector<int> expected = {2, 11, 4, 6, 5, 7, 1, 9, 10, 12, 3, 14, 13, 8};
    res.require(d3.to_permutation().images() == expected, "14-marker permutation differs");
    res.require(d3.algorithmic_permutation().images() == expected,
                "14-marker algorithmic permutation differs");
    std::vector<int> anti = {1, 3, 8};
    res.require(d3.to_permutation().anti_excedances() == anti, "14-marker anti-excedances differ");
    auto all = enumerate_diagrams(14, 3);
    res.require(std::find(all.begin(), all.end(), d3) != all.end(),
                "14-marker diagram missing from enumeration");
  }
  res.require(enumerate_diagrams(5, 1).size() == 1 &&
                  enumerate_diagrams(5, 1).front() == ChordDiagram::standard(5, {{1, 3}}),
              "(5,1) must be the single short chord");
  res.require(enumerate_diagrams(8, 2).size() == 20, "(8,2) must have 20 diagrams");
  // Generation algorithm replay with concrete rationals.
  {
    ConstructionParams p;
    p.s = {7, 31, 17};
    p.u = {41, 37, 19};
    p.v = {3, 23, 11};
    p.w = {5, 29, 13};
    const Rat s1 = 7, s2 = 31, s3 = 17, u1 = 41, u2 = 37, u3 = 19;
    const Rat v1 = 3, v2 = 23, v3 = 11, w1 = 5, w2 = 29, w3 = 13;
    // Stage one: fills down to 11 and the head of the first chord.
    RationalMatrix m(IndexSet{}, IndexSet{14});
    m = m.pre(13).pre(12).pre(11);
    m = m.inc(2, 1).x_op(2, v1).x_op(11, w1);
    m = m.y_op(m.cols().pred(2), s1);
    {
      RationalMatrix expect(IndexSet{1}, IndexSet{2, 11, 12, 13, 14});
      expect.set(1, 2, 1);
      expect.set(1, 11, v1);
      expect.set(1, 12, w1 * v1);
      expect.set(1, 14, s1);
      res.require(m == expect, "stage after head(c1) differs");
    }
    // Stage two: head and tail of the third chord.
    m = m.pre(10);
    m = m.inc(9, 3).x_op(9, v3).x_op(10, w3);
    m = m.y_op(m.cols().pred(9), s3);
    m = m.pre(8).y_op(8, u3);
    {
      RationalMatrix expect(IndexSet{1, 3}, IndexSet{2, 8, 9, 10, 11, 12, 13, 14});
      expect.set(1, 2, 1);
      expect.set(1, 11, -v1);
      expect.set(1, 12, -w1 * v1);
      expect.set(1, 14, -s1);
      expect.set(3, 2, s3);
      expect.set(3, 8, u3);
      expect.set(3, 9, 1);
      expect.set(3, 10, v3);
      expect.set(3, 11, w3 * v3);
      res.require(m == expect, "stage after tail(c3) differs");
    }
    // Full output.
    RationalMatrix full = construct_matrix(d3, p);
    RationalMatrix expect(IndexSet::interval(1, 3), IndexSet::interval(1, 14));
    expect.set(1, 1, u1);
    expect.set(1, 2, 1);
    expect.set(1, 11, v1);
    expect.set(1, 12, w1 * v1);
    expect.set(1, 14, s1);
    expect.set(2, 1, u1 * s2);
    expect.set(2, 2, s2);
    expect.set(2, 3, u2);
    expect.set(2, 4, 1);
    expect.set(2, 6, v2);
    expect.set(2, 7, w2 * v2);
    expect.set(3, 1, -u1 * s3);
    expect.set(3, 2, -s3);
    expect.set(3, 8, u3);
    expect.set(3, 9, 1);
    expect.set(3, 10, v3);
    expect.set(3, 11, w3 * v3);
    res.require(full == expect, "final 14-marker construct matrix differs");
    res.require(full.all_plueckers_nonnegative(), "14-marker matrix has a negative Pluecker");
  }
  // The condensed 8-marker example with sticky chain, sticky end and
  // head-to-tail chords.
  {
    ChordDiagram df = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
    ConstructionParams p;
    const Rat s1 = 7, s2 = 31, s3 = 17, u1 = 41, u2 = 37, u3 = 19;
    const Rat v1 = 3, v2 = 23, v3 = 11, w1 = 5, w2 = 29, w3 = 13;
    p.s = {s1, s2, s3};
    p.u = {u1, u2, u3};
    p.v = {v1, v2, v3};
    p.w = {w1, w2, w3};
    RationalMatrix full = construct_matrix(df, p);
    RationalMatrix expect(IndexSet::interval(1, 3), IndexSet::interval(1, 8));
    expect.set(1, 1, u1);
    expect.set(1, 2, 1);
    expect.set(1, 6, v1);
    expect.set(1, 7, w1 * v1 + w3 * v1);
    expect.set(1, 8, s1);
    expect.set(2, 1, u1 * s2);
    expect.set(2, 2, s2 + u2);
    expect.set(2, 3, 1);
    expect.set(2, 4, v2);
    expect.set(2, 5, w2 * v2);
    expect.set(3, 1, -u1 * s3);
    expect.set(3, 2, -s3);
    expect.set(3, 4, u3);
    expect.set(3, 5, 1 + w2 * u3);
    expect.set(3, 6, v3);
    expect.set(3, 7, w3 * v3);
    res.require(full == expect, "condensed 8-marker construct matrix differs");
  }
  // Single chord (1,2,3,4) on six markers: row (u,1,v,wv,0,s).
  {
    ChordDiagram d1 = ChordDiagram::standard(6, {{1, 3}});
    ConstructionParams p{{5}, {2}, {3}, {7}};
    RationalMatrix expect(IndexSet{1}, IndexSet::interval(1, 6));
    expect.set(1, 1, 2);
    expect.set(1, 2, 1);
    expect.set(1, 3, 3);
    expect.set(1, 4, 21);
    expect.set(1, 6, 5);
    res.require(construct_matrix(d1, p) == expect, "single-chord construct matrix differs");
  }
  // Lattice walk example.
  {
    LatticeWalkPair w{14, 3, {2, 8, 10}, {1, 3, 8}};
    res.require(walks_to_diagram(w) == d3, "14-marker walk image differs");
    res.require(diagram_to_walks(d3) == w, "14-marker walk preimage differs");
  }
  // Oplus diagram and its pipe dream.
  {
    OplusDiagram op = diagram_to_oplus(d3);
    std::vector<std::string> fill = {"+o++oooooo+", "+ooooo++o+", "+oo+++"};
    res.require(op.filling == fill, "14-marker oplus filling differs");
    std::vector<int> rows = {1, 3, 8};
    std::vector<int> cols = {14, 13, 12, 11, 10, 9, 7, 6, 5, 4, 2};
    res.require(op.row_labels == rows && op.col_labels == cols, "14-marker oplus labels differ");
    res.require(oplus_is_valid(op), "14-marker oplus invalid");
    DecoratedPermutation pipe = oplus_to_permutation(op);
    res.require(pipe.apply(1) == 2 && pipe.apply(2) == 11 && pipe.apply(3) == 4 && pipe.apply(4) == 6,
                "14-marker pipe flow differs");
    res.require(pipe.same_mapping(d3.to_permutation()), "14-marker pipe permutation differs");
  }
  // The large 18-marker example: permutation, oplus shape, sign table,
  // chord relations, Var membership.
  {
    ChordDiagram d9 = ChordDiagram::standard(
        18, {{1, 6}, {2, 4}, {4, 6}, {6, 10}, {7, 9}, {10, 16}, {11, 16}, {13, 16}});
    std::vector<int> expected = {3, 8, 5, 12, 1, 18, 2, 9, 16, 6, 4, 17, 14, 7, 15, 10, 11, 13};
    res.require(d9.to_permutation().images() == expected, "18-marker permutation differs");
    res.require(d9.algorithmic_permutation().images() == expected,
                "18-marker algorithmic permutation differs");
    auto st = d9.stats();
    res.require(st[0].is_sticky_parent && st[1].is_sticky_child, "c1/c2 sticky relation missing");
    res.require(std::find(st[1].head_to_tail_successors.begin(), st[1].head_to_tail_successors.end(),
                          2) != st[1].head_to_tail_successors.end(),
                "(c2,c3) head-to-tail missing");
    res.require(st[5].same_end_descendants == std::vector<int>{6, 7} &&
                    st[6].same_end_descendants == std::vector<int>{7},
                "(c6,c7,c8) same-end chain missing");
    res.require(st[1].is_short && st[2].is_short && st[4].is_short, "shorts of the 18-marker example");
    res.require(st[0].is_top && st[3].is_top && st[5].is_top && !st[1].is_top, "tops differ");
    OplusDiagram op = diagram_to_oplus(d9);
    std::vector<std::string> fill = {"+oooo+o+o+", "+oooooo+++", "+oooo+o++", "+o+oo+o+",
                                     "+oooo+++",   "+++oo+",     "+++oo+",    "+++o+"};
    res.require(op.filling == fill, "18-marker oplus filling differs");
    res.require(oplus_to_permutation(op).images() == expected, "18-marker pipe permutation differs");
    // Sign table from a sampled point.
    RationalMatrix m = sample_cell(d9, 5);
    SignRuleReport rep = check_sign_rules(m, d9);
    res.require(rep.ok, "18-marker sample fails sign rules");
    const DominoAssignment& a = rep.assignment;
    auto negative = [&](int l) {
      return sgn(a.epsilon[static_cast<std::size_t>(l)]) < 0;
    };
    res.require(negative(0) && !negative(1) && negative(2) && !negative(3) && !negative(4) &&
                    !negative(5) && !negative(6) && !negative(7),
                "18-marker epsilon signs differ");
    for (int l : {3, 6})
      res.require(sgn(a.gamma[static_cast<std::size_t>(l)]) < 0 &&
                      sgn(a.delta[static_cast<std::size_t>(l)]) < 0,
                  "18-marker gamma/delta negatives differ");
    for (int l : {0, 1, 2, 4, 5, 7})
      res.require(sgn(a.gamma[static_cast<std::size_t>(l)]) > 0 &&
                      sgn(a.delta[static_cast<std::size_t>(l)]) > 0,
                  "18-marker gamma/delta positives differ");
    auto ratio = [&](int l) { return a.delta[static_cast<std::size_t>(l)] / a.gamma[static_cast<std::size_t>(l)]; };
    auto tail_ratio = [&](int l) { return a.beta[static_cast<std::size_t>(l)] / a.alpha[static_cast<std::size_t>(l)]; };
    res.require(ratio(1) < tail_ratio(2), "ratio d2/g2 < b3/a3 fails");
    res.require(ratio(2) < ratio(0) && ratio(0) < tail_ratio(3), "ratio chain d3/g3 < d1/g1 < b4/a4 fails");
    res.require(ratio(3) < tail_ratio(5), "ratio d4/g4 < b6/a6 fails");
    res.require(ratio(7) < ratio(6) && ratio(6) < ratio(5), "ratio chain d8 < d7 < d6 fails");
    // Var membership.
    VarSets vars = var_set(d9);
    auto has = [&](const std::vector<VarElement>& v, VarElement e) {
      return std::find(v.begin(), v.end(), e) != v.end();
    };
    res.require(has(vars.var, {VarKind::Eta, 5, 6}) && has(vars.var, {VarKind::Eta, 6, 7}),
                "eta(6,7)/eta(7,8) missing from Var");
    res.require(has(vars.var, {VarKind::Theta, 1, 2}), "theta(2,3) missing from Var");
    res.require(has(vars.var, {VarKind::Eta, 0, 2}), "eta(1,3) missing from Var");
    res.require(!has(vars.var, {VarKind::Eta, 5, 7}) && has(vars.var_tilde, {VarKind::Eta, 5, 7}),
                "eta(6,8) must be in Var~ only");
    res.require(!has(vars.var, {VarKind::Theta, 2, 3}) && has(vars.var_tilde, {VarKind::Theta, 2, 3}),
                "theta(3,4) must be in Var~ only");
    res.require(!has(vars.var, {VarKind::DeltaHat, 5, -1}) && !has(vars.var, {VarKind::GammaHat, 6, -1}),
                "eta exclusions not applied");
    res.require(!has(vars.var, {VarKind::GammaHat, 1, -1}) && !has(vars.var, {VarKind::Beta, 2, -1}),
                "theta exclusions not applied");
  }
  return res;
}

SuiteResult domino(int n, const VerifyConfig& cfg) {
  SuiteResult res{"domino-n" + std::to_string(n)};
  for (int k = 0; k <= n - 4; ++k) {
    if (cfg.k >= 0 && k != cfg.k) continue;
    auto cells = enumerate_diagrams(n, k);
    std::vector<SuiteResult> partial(cells.size());
    parallel_for(cells.size(), cfg.jobs, [&](std::size_t ci) {
      const ChordDiagram& d = cells[ci];
      SuiteResult& r = partial[ci];
      std::vector<IndexSet> pattern;
      for (int s = 0; s < cfg.domino_seeds; ++s) {
        RationalMatrix m = sample_cell(d, mix_seed(cfg.seed, 10 * ci + static_cast<std::uint64_t>(s)));
        r.require(m.all_plueckers_nonnegative(), "negative Pluecker for " + diag_str(d));
        SignRuleReport rep = check_sign_rules(m, d);
        r.require(rep.ok, "sign rules fail for " + diag_str(d) + ": " + rep.message);
        auto pat = m.nonzero_pluecker_pattern();
        if (s == 0)
          pattern = pat;
        else
          r.require(pat == pattern, "Pluecker pattern varies across seeds for " + diag_str(d));
        // Exact parameter recovery.
        ConstructionParams p = sample_params(d, mix_seed(cfg.seed, 10 * ci + static_cast<std::uint64_t>(s)));
        ConstructionParams q = recover_params(d, m);
        r.require(p.s == q.s && p.u == q.u && p.v == q.v && p.w == q.w,
                  "recover_params roundtrip differs for " + diag_str(d));
      }
      // Rightwards algorithm: same nonzero-Pluecker pattern.
      {
        ConstructionParams p = sample_params(d, mix_seed(cfg.seed, 777 + ci));
        RationalMatrix m = construct_matrix_rightwards(d, p);
        r.require(m.all_plueckers_nonnegative(),
                  "rightwards matrix has a negative Pluecker for " + diag_str(d));
        r.require(m.nonzero_pluecker_pattern() == pattern,
                  "rightwards pattern differs for " + diag_str(d));
        if (d.k() > 0) {
          ConstructionParams q = recover_params(d, m);
          RationalMatrix again = construct_matrix(d, q);
          r.require(again.same_row_span(m), "rightwards point not matched by recovered params for " +
                                                diag_str(d));
        }
      }
      // Direct template instantiation from a sign-rule assignment.
      if (auto a = random_assignment(d, mix_seed(cfg.seed, 555 + ci))) {
        RationalMatrix m = matrix_from_assignment(d, *a);
        r.require(m.all_plueckers_nonnegative(),
                  "direct assignment gives a negative Pluecker for " + diag_str(d));
        r.require(m.nonzero_pluecker_pattern() == pattern,
                  "direct assignment pattern differs for " + diag_str(d));
      } else {
        r.require(false, "no sign-rule assignment found for " + diag_str(d));
      }
      // Top-chord support property: for each p in A some P_I != 0 with
      // I meeting A exactly at p.
      auto st = d.stats();
      if (d.k() > 0) {
        RationalMatrix m = sample_cell(d, mix_seed(cfg.seed, 999 + ci));
        for (int l = 0; l < d.k(); ++l) {
          if (!st[static_cast<std::size_t>(l)].is_top) continue;
          const Chord& c = d.chord(l);
          std::vector<int> a_set = {c.i, c.i + 1, c.j, c.j + 1, n};
          for (int p : a_set) {
            bool found = false;
            for (const IndexSet& I : m.nonzero_pluecker_pattern()) {
              int inter = 0;
              bool has_p = false;
              for (int x : a_set)
                if (I.contains(x)) {
                  ++inter;
                  has_p = has_p || x == p;
                }
              if (inter == 1 && has_p) {
                found = true;
                break;
              }
            }
            r.require(found, "no Pluecker meeting the top-chord support only at " +
                                 std::to_string(p) + " for " + diag_str(d));
          }
        }
      }
    });
    for (const SuiteResult& r : partial) {
      res.checks += r.checks;
      if (!r.ok) res.ok = false;
      for (const auto& f : r.failures)
        if (res.failures.size() < 50) res.failures.push_back(f);
    }
  }
  return res;
}

SuiteResult inverse_roundtrip(int n, const VerifyConfig& cfg) {
  SuiteResult res{"inverse-n" + std::to_string(n)};
  for (int k = 0; k <= n - 4; ++k) {
    if (cfg.k >= 0 && k != cfg.k) continue;
    auto panel = z_panel(n, k, cfg.zs, mix_seed(cfg.seed, 31));
    auto cells = enumerate_diagrams(n, k);
    std::vector<SuiteResult> partial(cells.size());
    parallel_for(cells.size(), cfg.jobs, [&](std::size_t ci) {
      const ChordDiagram& d = cells[ci];
      SuiteResult& r = partial[ci];
      for (int s = 0; s < cfg.domino_seeds; ++s) {
        RationalMatrix c0 = sample_cell(d, mix_seed(cfg.seed, 40 * ci + static_cast<std::uint64_t>(s)));
        for (const PositiveZ& z : panel) {
          RationalMatrix y = amap(c0, z);
          RationalMatrix c1;
          try {
            c1 = invert_point(d, y, z);
          } catch (const std::exception& e) {
            r.require(false, "invert_point failed for " + diag_str(d) + ": " + e.what());
            continue;
          }
          // Exact equality up to positive row scaling: the reconstruction
          // is beta-normalized, so each original row must be its beta
          // multiple.
          bool exact = true;
          for (int l = 0; l < d.k(); ++l) {
            Rat beta = c0.at(c0.rows().at(static_cast<std::size_t>(l)), d.chord(l).i + 1);
            if (sgn(beta) <= 0) exact = false;
            for (std::size_t col = 0; col < c0.col_count(); ++col)
              if (c0.at_pos(static_cast<std::size_t>(l), col) !=
                  beta * c1.at_pos(static_cast<std::size_t>(l), col))
                exact = false;
          }
          r.require(exact, "inverse roundtrip not exact for " + diag_str(d));
        }
      }
    });
    for (const SuiteResult& r : partial) {
      res.checks += r.checks;
      if (!r.ok) res.ok = false;
      for (const auto& f : r.failures)
        if (res.failures.size() < 50) res.failures.push_back(f);
    }
  }
  return res;
}

SuiteResult boundary_law(int n, const VerifyConfig& cfg) {
  SuiteResult res{"boundary-law-n" + std::to_string(n)};
  for (int k = 0; k <= n - 4; ++k) {
    if (cfg.k >= 0 && k != cfg.k) continue;
    auto panel = z_panel(n, k, cfg.zs, mix_seed(cfg.seed, 77));
    for (const ChordDiagram& d : enumerate_diagrams(n, k)) {
      auto st = d.stats();
      for (int s = 0; s < cfg.samples; ++s) {
        RationalMatrix c = sample_cell(d, mix_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(s)));
        res.require(!in_S_partial_A(c).has_value(),
                    "interior sample lies in S_dA for " + diag_str(d));
        for (const PositiveZ& z : panel) {
          RationalMatrix y = amap(c, z);
          TwistorEvaluator ev(y, z);
          for (int i = 1; i + 1 < n; ++i)
            for (int j = i + 2; j + 1 <= n; ++j) {
              Rat v = ev.eval_tuple({i, i + 1, j, j + 1});
              res.require(sgn(v) == 1, "boundary twistor not positive for " + diag_str(d));
            }
          for (int i = 2; i + 1 <= n - 1; ++i) {
            Rat v = ev.eval_tuple({1, i, i + 1, n});
            int expect = k % 2 == 0 ? 1 : -1;
            res.require(sgn(v) == expect, "wrap-around twistor sign off for " + diag_str(d));
          }
          for (int l = 0; l < k; ++l) {
            if (!st[static_cast<std::size_t>(l)].is_top) continue;
            const Chord& c_l = d.chord(l);
            const int behind = st[static_cast<std::size_t>(l)].behind;
            const int below = st[static_cast<std::size_t>(l)].below;
            std::vector<std::pair<int, int>> expect = {
                {c_l.i, behind}, {c_l.i + 1, behind + 1}, {c_l.j, behind - below},
                {c_l.j + 1, behind - below + 1}, {n, 0}};
            std::vector<int> a_set = {c_l.i, c_l.i + 1, c_l.j, c_l.j + 1, n};
            for (auto [p, parity] : expect) {
              std::array<int, 4> tuple{};
              int w = 0;
              for (int x : a_set)
                if (x != p) tuple[static_cast<std::size_t>(w++)] = x;
              Rat v = ev.eval_tuple(tuple);
              int sign = ((parity % 2) + 2) % 2 == 0 ? 1 : -1;
              res.require(sgn(v) == sign,
                          "top-chord five-index twistor sign off for " + diag_str(d));
            }
          }
        }
      }
    }
  }
  return res;
}

SuiteResult separation(int n, const VerifyConfig& cfg) {
  SuiteResult res{"separation-n" + std::to_string(n)};
  auto cells = all_cells(n);
  struct Pair {
    std::size_t a, b;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) pairs.push_back({a, b});
  std::vector<SuiteResult> partial(pairs.size());
  parallel_for(pairs.size(), cfg.jobs, [&](std::size_t pi) {
    const ChordDiagram& da = cells[pairs[pi].a];
    const ChordDiagram& db = cells[pairs[pi].b];
    SuiteResult& r = partial[pi];
    Separator sep;
    try {
      sep = separator(da, db);
    } catch (const std::exception& e) {
      r.require(false, "separator failed for " + diag_str(da) + " vs " + diag_str(db) + ": " + e.what());
      return;
    }
    r.require(sep.functionary.is_pure() && !sep.functionary.is_zero(),
              "separator not a pure nonzero functionary");
    SeparationCheck chk = verify_separator(da, db, sep, mix_seed(cfg.seed, pi), cfg.samples, cfg.zs);
    r.checks += chk.evaluations;
    r.require(chk.ok, "pair " + diag_str(da) + " | " + diag_str(db) + ": " + chk.failure);
  });
  for (const SuiteResult& r : partial) {
    res.checks += r.checks;
    if (!r.ok) res.ok = false;
    for (const auto& f : r.failures)
      if (res.failures.size() < 50) res.failures.push_back(f);
  }
  return res;
}

SuiteResult boundary_pairing(int n, const VerifyConfig& cfg) {
  SuiteResult res{"boundary-pairing-n" + std::to_string(n)};
  for (int k = 0; k <= n - 4; ++k) {
    if (cfg.k >= 0 && k != cfg.k) continue;
    for (const ChordDiagram& d : enumerate_diagrams(n, k)) {
      // Shift involutions; the undo direction depends on the case applied.
      for (int l = 0; l < k; ++l) {
        auto undo_kind = [](const std::string& case_name) {
          if (case_name == "tail-left") return ShiftKind::TailRight;
          if (case_name == "tail-right") return ShiftKind::TailLeft;
          if (case_name.rfind("tail-right-short", 0) == 0) return ShiftKind::HeadLeft;
          if (case_name == "head-left" || case_name == "head-left-to-child")
            return ShiftKind::HeadRight;
          if (case_name.rfind("head-left", 0) == 0) return ShiftKind::TailRight;
          return ShiftKind::HeadLeft;  // head-right cases
        };
        for (ShiftKind kind : {ShiftKind::TailLeft, ShiftKind::TailRight, ShiftKind::HeadLeft,
                               ShiftKind::HeadRight}) {
          auto sh = shift(d, l, kind);
          if (!sh) continue;
          res.require(sh->target.k() == k, "shift changed k: " + sh->case_name);
          auto bk = shift(sh->target, sh->moved_chord, undo_kind(sh->case_name));
          res.require(bk.has_value() && bk->target == d,
                      "shift involution failed: " + sh->case_name + " for " + diag_str(d));
        }
      }
      // Total classification with permutation equality for paired cases.
      std::vector<BoundaryClass> classes;
      try {
        classes = pair_boundaries(d);
      } catch (const std::exception& e) {
        res.require(false, "pair_boundaries failed for " + diag_str(d) + ": " + e.what());
        continue;
      }
      auto vars = var_set(d);
      res.require(classes.size() == vars.var.size(), "classification misses Var elements");
      for (const BoundaryClass& bc : classes) {
        if (bc.is_sa) {
          RationalMatrix w = sa_witness(d, bc.star, mix_seed(cfg.seed, 5));
          res.require(in_S_partial_A(w).has_value(),
                      "S_dA witness fails for " + bc.star.str() + " in " + diag_str(d));
          res.require(w.all_plueckers_nonnegative(),
                      "S_dA witness not nonnegative for " + bc.star.str() + " in " + diag_str(d));
        } else {
          DecoratedPermutation mine = boundary_permutation(d, bc.star);
          DecoratedPermutation theirs = boundary_permutation(*bc.partner, *bc.partner_star);
          res.require(mine.same_mapping(theirs),
                      "boundary permutations differ for " + bc.star.str() + " in " + diag_str(d) +
                          " (" + bc.rule + ")");
          res.require(static_cast<int>(mine.anti_excedances().size()) == k,
                      "boundary permutation has wrong anti-excedance count");
          res.require(!mine.same_mapping(d.algorithmic_permutation()),
                      "boundary permutation equals the cell permutation");
          // Pairing symmetry: the partner's classification points back.
          bool back = false;
          for (const BoundaryClass& pc : pair_boundaries(*bc.partner)) {
            if (pc.star == *bc.partner_star && !pc.is_sa && pc.partner && *pc.partner == d &&
                pc.partner_star && *pc.partner_star == bc.star)
              back = true;
          }
          res.require(back, "pairing not symmetric for " + bc.star.str() + " in " + diag_str(d));
        }
      }
    }
  }
  return res;
}

SuiteResult surjectivity(int n, const VerifyConfig& cfg) {
  SuiteResult res{"surjectivity-n" + std::to_string(n)};
  for (int k = 0; k <= n - 4; ++k) {
    if (cfg.k >= 0 && k != cfg.k) continue;
    auto panel = z_panel(n, k, 1, mix_seed(cfg.seed, 13));
    const PositiveZ& z = panel.front();
    std::vector<SuiteResult> partial(static_cast<std::size_t>(cfg.surjectivity_points));
    parallel_for(partial.size(), cfg.jobs, [&](std::size_t p) {
      SuiteResult& r = partial[p];
      RationalMatrix c = sample_positive_point(IndexSet::interval(1, n), k,
                                               mix_seed(cfg.seed, 100000 + p));
      RationalMatrix y = amap(c, z);
      std::optional<ChordDiagram> hit;
      try {
        hit = identify_cell(y, z, n, k);
      } catch (const std::exception& e) {
        r.require(false, std::string("identify_cell aborted: ") + e.what());
        return;
      }
      if (!hit) {
        // A rejected point must be a boundary point.
        r.require(in_S_partial_A(c).has_value(), "rejected interior point outside S_dA");
      } else {
        r.require(true, "");
      }
    });
    for (const SuiteResult& r : partial) {
      res.checks += r.checks;
      if (!r.ok) res.ok = false;
      for (const auto& f : r.failures)
        if (res.failures.size() < 50) res.failures.push_back(f);
    }
  }
  return res;
}

SuiteResult promotions(const VerifyConfig& cfg) {
  SuiteResult res{"promotions"};
  const int n = 7;
  for (int k = 1; k <= 3; ++k) {
    auto panel = z_panel(n, k, cfg.zs, mix_seed(cfg.seed, 21));
    for (int s = 0; s < cfg.samples; ++s) {
      SplitMix64 gen(mix_seed(cfg.seed, 300 + static_cast<std::uint64_t>(10 * k + s)));
      // (a) upper-embedding promotion of <3457>, including the exact
      // rewriting identity with the transformed Z.
      {
        RationalMatrix c2 = sample_positive_point(IndexSet{2, 3, 4, 5, 7}, k - 1, gen.next());
        RationalMatrix c1 = c2.pre(6);
        Rat t = gen.rational(), t2 = gen.rational(), t3 = gen.rational(), s1 = gen.rational();
        RationalMatrix c = c1.iota(1, {{t, t2, t3}, {s1}});
        for (const PositiveZ& z : panel) {
          RationalMatrix y = amap(c, z);
          TwistorEvaluator ev(y, z);
          Rat lhs_bracket = ev.eval_tuple({1, 2, 5, 6});
          Rat rhs = lhs_bracket * ev.eval_tuple({3, 4, 5, 7}) -
                    ev.eval_tuple({1, 2, 5, 7}) * ev.eval_tuple({3, 4, 5, 6});
          // The promoted sign statement needs the source twistor <3457> to
          // be a genuine boundary twistor of the smaller chain, which caps
          // the row count: k-1 <= 1.
          if (k <= 2)
            res.require(sgn(rhs) > 0, "warmup promotion not positive (k=" + std::to_string(k) + ")");
          // Z' = [x_1(s1)][y_7(t)][y_6(t2)][y_5(t3)] Z row by row.
          std::vector<std::vector<Rat>> zr;
          for (int m = 1; m <= n; ++m) {
            std::vector<Rat> row;
            for (int col = 1; col <= k + 4; ++col) row.push_back(z.entry(m, col));
            zr.push_back(row);
          }
          auto add_row = [&](int dst, int src, const Rat& f) {
            for (std::size_t col = 0; col < zr[0].size(); ++col)
              zr[static_cast<std::size_t>(dst - 1)][col] += f * zr[static_cast<std::size_t>(src - 1)][col];
          };
          int ksign = k % 2 == 1 ? 1 : -1;  // (-1)^(k-1)
          add_row(6, 5, t3);                 // y_5(t3)
          add_row(7, 6, t2);                 // y_6(t2)
          add_row(1, 7, Rat(ksign) * t);     // y_7(t): overflow row 7(+)1 = 1
          add_row(2, 1, s1);                 // x_1(s1)
          RationalMatrix stacked(IndexSet::interval(1, k + 4), IndexSet::interval(1, k + 4));
          for (int r2 = 0; r2 < k; ++r2)
            for (int col = 1; col <= k + 4; ++col)
              stacked.set(r2 + 1, col, y.at_pos(static_cast<std::size_t>(r2), static_cast<std::size_t>(col - 1)));
          int w = k;
          for (int m : {3, 4, 5, 7}) {
            for (int col = 1; col <= k + 4; ++col)
              stacked.set(w + 1, col, zr[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(col - 1)]);
            ++w;
          }
          Rat lhs = lhs_bracket * stacked.det();
          res.require(lhs == rhs, "warmup promotion identity broken (k=" + std::to_string(k) + ")");
        }
      }
      // (b) lower embedding: non-negative quadratic and the proportional
      // coefficient vector on the 4567 layout.
      {
        RationalMatrix c2 = sample_positive_point(IndexSet{1, 2, 3, 4, 5, 7}.without(5), k - 1,
                                                  gen.next());
        RationalMatrix c1 = c2.pre(6);  // dead column at n-1 = 6
        Rat t1 = gen.rational(), t2 = gen.rational(), s1 = gen.rational(), s2 = gen.rational();
        RationalMatrix c = c1.iota(5, {{t1, t2}, {s1, s2}});
        for (const PositiveZ& z : panel) {
          RationalMatrix y = amap(c, z);
          TwistorEvaluator ev(y, z);
          for (int j = 1; j <= n - 5; ++j) {
            Rat v = ev.eval_functionary(favorite(j, j + 1, n - 4, n - 3, n - 2, n - 1, n));
            res.require(sgn(v) >= 0, "lower-embedding quadratic negative at j=" + std::to_string(j));
          }
        }
        // 4567 layout without the dead column: fresh embedding of a point
        // on [7] minus {5}.
        RationalMatrix base = sample_positive_point(IndexSet::interval(1, 7).without(5), k - 1,
                                                    gen.next());
        RationalMatrix cc = base.iota(5, {{t1, t2}, {s1, s2}});
        for (const PositiveZ& z : panel) {
          RationalMatrix y = amap(cc, z);
          TwistorEvaluator ev(y, z);
          std::vector<Rat> lhs = {ev.eval_tuple({4, 5, 6, 7}), -ev.eval_tuple({3, 5, 6, 7}),
                                  ev.eval_tuple({3, 4, 6, 7}), -ev.eval_tuple({3, 4, 5, 7}),
                                  ev.eval_tuple({3, 4, 5, 6})};
          std::vector<Rat> rhs = {t1 * t2, t1, 1, s1, s1 * s2};
          Rat lambda = lhs[2];
          res.require(sgn(lambda) > 0, "4567 proportionality factor not positive");
          for (int idx = 0; idx < 5; ++idx)
            res.require(lhs[static_cast<std::size_t>(idx)] == lambda * rhs[static_cast<std::size_t>(idx)],
                        "4567 proportional vector law fails");
        }
      }
      // (c) 1267 layout for the upper embedding.
      {
        RationalMatrix base = sample_positive_point(IndexSet::interval(2, 7), k - 1, gen.next());
        Rat t1 = gen.rational(), t2 = gen.rational(), t3 = gen.rational(), s1 = gen.rational();
        RationalMatrix cc = base.iota(1, {{t1, t2, t3}, {s1}});
        int ks = k % 2 == 0 ? 1 : -1;  // (-1)^k
        for (const PositiveZ& z : panel) {
          RationalMatrix y = amap(cc, z);
          TwistorEvaluator ev(y, z);
          std::vector<Rat> lhs = {ev.eval_tuple({1, 2, 6, 7}), -ev.eval_tuple({1, 2, 5, 7}),
                                  ev.eval_tuple({1, 2, 5, 6}), -Rat(ks) * ev.eval_tuple({2, 5, 6, 7}),
                                  Rat(ks) * ev.eval_tuple({1, 5, 6, 7})};
          std::vector<Rat> rhs = {t1 * t2 * t3, t1 * t2, t1, 1, s1};
          Rat lambda = lhs[3];
          res.require(sgn(lambda) > 0, "1267 proportionality factor not positive");
          for (int idx = 0; idx < 5; ++idx)
            res.require(lhs[static_cast<std::size_t>(idx)] == lambda * rhs[static_cast<std::size_t>(idx)],
                        "1267 proportional vector law fails");
          // (d) upper-embedding quadratic is nonpositive.
          for (int j = 2; j <= n - 4; ++j) {
            Rat v = ev.eval_functionary(favorite(1, 2, j, j + 1, n - 2, n - 1, n));
            res.require(sgn(v) <= 0, "upper-embedding quadratic positive at j=" + std::to_string(j));
          }
        }
      }
    }
  }
  return res;
}

SuiteResult middle_decomposition(int n, int k, const VerifyConfig& cfg) {
  SuiteResult res{"middle-decomposition-n" + std::to_string(n) + "k" + std::to_string(k)};
  MiddleDecompositionReport rep = check_middle_decomposition(n, k, cfg.seed, cfg.samples, cfg.zs);
  res.checks += rep.checks;
  for (const auto& f : rep.failures) res.require(false, f);
  res.require(rep.ok, "middle decomposition report not ok");
  return res;
}

std::vector<SuiteResult> run_all(const VerifyConfig& cfg) {
  std::vector<SuiteResult> out;
  out.push_back(counts(cfg.n));
  out.push_back(permutation_coherence(std::min(cfg.n, 9)));
  out.push_back(regressions());
  out.push_back(domino(cfg.n, cfg));
  out.push_back(inverse_roundtrip(cfg.n, cfg));
  out.push_back(boundary_law(cfg.n, cfg));
  out.push_back(separation(cfg.n, cfg));
  out.push_back(boundary_pairing(cfg.n, cfg));
  out.push_back(surjectivity(cfg.n, cfg));
  out.push_back(promotions(cfg));
  if (cfg.k >= 1 && cfg.n >= cfg.k + 4)
    out.push_back(middle_decomposition(cfg.n, cfg.k, cfg));
  else if (cfg.n >= 5)
    out.push_back(middle_decomposition(cfg.n, 1, cfg));
  return out;
}

}  // namespace bcfw::verify
