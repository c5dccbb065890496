#include <doctest.h>

#include "bcfw/matrix.hpp"
#include "bcfw/prng.hpp"

using namespace bcfw;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Rat laplace_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m[0][c]) == 0) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Rat term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

RationalMatrix random_matrix(const IndexSet& rows, const IndexSet& cols, std::uint64_t seed,
                             bool signs) {
  SplitMix64 gen(seed);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Rat v = gen.rational();
      if (signs && gen.below(2)) v = -v;
      m.set_pos(r, c, v);
    }
  return m;
}

}  // namespace

TEST_CASE("index set cyclic arithmetic") {
  IndexSet s{2, 5, 9};
  CHECK(s.succ(2) == 5);
  CHECK(s.succ(9) == 2);
  CHECK(s.pred(2) == 9);
  CHECK(s.pred(5) == 2);
  CHECK(s.succ(5, 2) == 2);
  CHECK_THROWS(s.position(3));
  CHECK(s.with(3).contains(3));
  CHECK_THROWS(s.with(5));
}

TEST_CASE("bareiss determinant matches the cofactor oracle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u}) {
      IndexSet idx = IndexSet::interval(1, static_cast<int>(n));
      RationalMatrix m = random_matrix(idx, idx, 100 * seed + n, true);
      std::vector<std::vector<Rat>> raw;
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rat> row;
        for (std::size_t c = 0; c < n; ++c) row.push_back(m.at_pos(r, c));
        raw.push_back(std::move(row));
      }
      CHECK(m.det() == laplace_det(raw));
    }
  }
}

TEST_CASE("pre inserts a zero column and keeps minors") {
  // pre(13) on the 1x{2,11,12,14} row used by the generation algorithm.
  RationalMatrix m(IndexSet{1}, IndexSet{2, 11, 12, 14});
  m.set(1, 2, 1);
  m.set(1, 11, rat_of(3));
  m.set(1, 12, rat_of(15));
  m.set(1, 14, rat_of(7));
  RationalMatrix p = m.pre(13);
  CHECK(p.cols() == IndexSet{2, 11, 12, 13, 14});
  CHECK(p.at(1, 13) == 0);
  CHECK(p.at(1, 12) == rat_of(15));

  // 0-row case.
  RationalMatrix empty(IndexSet{}, IndexSet{7});
  CHECK(empty.pre(5).cols() == IndexSet{5, 7});

  // Identity: P_{1,2} unchanged, any minor through the new column is zero.
  RationalMatrix id = RationalMatrix::identity(IndexSet{1, 2});
  RationalMatrix id3 = id.pre(3);
  CHECK(id3.pluecker(IndexSet{1, 2}) == 1);
  CHECK(id3.pluecker(IndexSet{1, 3}) == 0);
  CHECK(id3.pluecker(IndexSet{2, 3}) == 0);
}

TEST_CASE("inc places a unit row and preserves nonnegativity") {
  RationalMatrix empty(IndexSet{}, IndexSet{2, 3});
  RationalMatrix one = empty.inc(1, 1);
  CHECK(one.rows().size() == 1);
  CHECK(one.at(1, 1) == 1);
  CHECK(one.at(1, 2) == 0);
  CHECK(one.at(1, 3) == 0);

  // Exhaustive minor check on random nonnegative 2x4 inputs.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RationalMatrix c = random_matrix(IndexSet{1, 2}, IndexSet::interval(1, 4), seed, false);
    if (!c.all_plueckers_nonnegative()) continue;
    for (int i = 5; i <= 5; ++i) {
      RationalMatrix bigger = c.inc(i, 3);
      CHECK(bigger.all_plueckers_nonnegative());
    }
    RationalMatrix inner = c.pre(5).inc(6, 3);
    CHECK(inner.all_plueckers_nonnegative());
  }
}

TEST_CASE("x and y are inverse pairs and preserve positivity") {
  SplitMix64 gen(5);
  RationalMatrix c = random_matrix(IndexSet{1, 2}, IndexSet::interval(1, 5), 17, false);
  for (int i = 1; i <= 5; ++i) {
    Rat t = gen.rational();
    CHECK(c.x_op(i, t).x_op(i, -t) == c);
    CHECK(c.y_op(i, t).y_op(i, -t) == c);
  }
  // Nonnegative input, nonnegative t: every Pluecker stays nonnegative,
  // including the overflow column operations.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RationalMatrix m = random_matrix(IndexSet{1, 2, 3}, IndexSet::interval(1, 6), 300 + seed, false);
    if (!m.all_plueckers_nonnegative()) continue;
    for (int i = 1; i <= 6; ++i) {
      CHECK(m.x_op(i, rat_of(2, 3)).all_plueckers_nonnegative());
      CHECK(m.y_op(i, rat_of(5, 7)).all_plueckers_nonnegative());
    }
  }
  // Odd k adds +t col_n to col_1; even k subtracts.
  RationalMatrix odd = random_matrix(IndexSet{1}, IndexSet::interval(1, 4), 7, false);
  RationalMatrix sh = odd.x_op(4, rat_of(1));
  CHECK(sh.at(1, 1) == odd.at(1, 1) + odd.at(1, 4));
  RationalMatrix even = random_matrix(IndexSet{1, 2}, IndexSet::interval(1, 4), 8, false);
  RationalMatrix sh2 = even.x_op(4, rat_of(1));
  CHECK(sh2.at(1, 1) == even.at(1, 1) - even.at(1, 4));
}

TEST_CASE("iota composes inc with side multiples") {
  RationalMatrix c = random_matrix(IndexSet{1}, IndexSet{1, 2, 3, 4, 6, 7}, 23, false);
  // All parameters zero degenerates to inc exactly.
  EmbeddingParams zero{{0, 0}, {0, 0}};
  CHECK(c.iota(5, zero) == c.inc(5, 2));
  // Tiny positive parameters: the new row has l + r + 1 nonzero entries at
  // the predicted positions.
  EmbeddingParams tiny{{rat_of(1, 1000), rat_of(1, 1000)}, {rat_of(1, 1000), rat_of(1, 1000)}};
  RationalMatrix e = c.iota(5, tiny);
  int nonzero = 0;
  for (int col : e.cols())
    if (sgn(e.at(2, col)) != 0) ++nonzero;
  CHECK(nonzero == 5);
  CHECK(e.at(2, 5) == 1);
  CHECK(e.at(2, 4) == rat_of(1, 1000));
  CHECK(e.at(2, 3) == rat_of(1, 1000000));
  CHECK(e.at(2, 6) == rat_of(1, 1000));
  CHECK(e.at(2, 7) == rat_of(1, 1000000));
  CHECK_THROWS(c.iota(5, EmbeddingParams{{1, 1, 1, 1}, {1, 1, 1}}));
}

TEST_CASE("lower and upper embedding matrix forms") {
  // Lower embedding iota_{n-2,2,2} bottom row (.., tu, u, 1, v, vw).
  RationalMatrix c = random_matrix(IndexSet{1}, IndexSet{1, 2, 3, 4, 5, 7}, 31, false);
  Rat t = rat_of(2), u = rat_of(3), v = rat_of(5), w = rat_of(7);
  RationalMatrix low = c.iota(6, {{u, t}, {v, w}});
  CHECK(low.at(2, 4) == t * u);
  CHECK(low.at(2, 5) == u);
  CHECK(low.at(2, 6) == 1);
  CHECK(low.at(2, 7) == v);
  CHECK(low.at(2, 1) == v * w);  // overflow wraps to the first column
  // Upper embedding iota_{1,3,1} top row (1, t, 0.., (-1)^{k-1}uvw, ..).
  RationalMatrix d = random_matrix(IndexSet{1}, IndexSet::interval(2, 7), 37, false);
  RationalMatrix up = d.iota(1, {{t, u, v}, {w}});
  CHECK(up.at(2, 1) == 1);
  CHECK(up.at(2, 2) == w);
  CHECK(up.at(2, 7) == t);
  CHECK(up.at(2, 6) == t * u);
  CHECK(up.at(2, 5) == t * u * v);
}

TEST_CASE("pluecker rejects wrong sizes and sees zero rows") {
  RationalMatrix m = random_matrix(IndexSet{1, 2}, IndexSet::interval(1, 5), 41, false);
  CHECK_THROWS(m.pluecker(IndexSet{1, 2, 3}));
  RationalMatrix z(IndexSet{1, 2}, IndexSet::interval(1, 5));
  z.set(1, 1, 1);
  CHECK(z.pluecker(IndexSet{2, 3}) == 0);  // row 2 is zero
}

TEST_CASE("middle embedding block form and constraints") {
  SplitMix64 gen(3);
  const int n = 9, j = 4, k1 = 1, k2 = 1;
  RationalMatrix left = random_matrix(IndexSet{1}, IndexSet::interval(1, j + 1).with(n), 51, false);
  RationalMatrix right = random_matrix(IndexSet{1}, IndexSet::interval(j, n - 1), 52, false);
  Rat s1 = gen.rational(), s2 = gen.rational(), t1 = gen.rational(), t2 = gen.rational();
  RationalMatrix m = middle_embedding(j, s1, s2, t1, t2, left, right);
  CHECK(m.row_count() == 3);
  // Middle row v with the (-1)^{k2} signs.
  CHECK(m.at(2, j) == s1);
  CHECK(m.at(2, j + 1) == s2);
  CHECK(m.at(2, n - 2) == -t1);
  CHECK(m.at(2, n - 1) == -t2);
  CHECK(m.at(2, n) == -1);
  CHECK(m.at(2, 1) == 0);
  // The paper routes (k1, j) = (0, 1) through the upper embedding instead.
  RationalMatrix l0(IndexSet{}, IndexSet::interval(1, 2).with(5));
  RationalMatrix r0(IndexSet{}, IndexSet::interval(1, 4));
  CHECK_THROWS(middle_embedding(1, s1, s2, t1, t2, l0, r0));
}

TEST_CASE("middle embedding with k2 = 0 matches the lower embedding cell") {
  // Upsilon_{n-4}(L) and the lower embedding of L with a dead column at
  // n-1 land in the same positroid: equal nonzero Pluecker patterns.
  const int n = 8, j = n - 4;
  SplitMix64 gen(11);
  RationalMatrix base = random_matrix(IndexSet{1, 2}, IndexSet::interval(1, j + 1).with(n), 61, false);
  REQUIRE(base.all_plueckers_nonnegative());
  RationalMatrix r0(IndexSet{}, IndexSet::interval(j, n - 1));
  Rat s1 = gen.rational(), s2 = gen.rational(), t1 = gen.rational(), t2 = gen.rational();
  RationalMatrix mid = middle_embedding(j, s1, s2, t1, t2, base, r0);
  RationalMatrix lower =
      base.pre(n - 1).iota(n - 2, {{gen.rational(), gen.rational()}, {gen.rational(), gen.rational()}});
  CHECK(mid.nonzero_pluecker_pattern() == lower.nonzero_pluecker_pattern());
}

TEST_CASE("cauchy binet sign is the inversion parity") {
  CHECK(cauchy_binet_sign(IndexSet{5, 6}, IndexSet{1, 2, 3, 4}) == 1);
  CHECK(cauchy_binet_sign(IndexSet{2}, IndexSet{1, 3}) == -1);
  CHECK(cauchy_binet_sign(IndexSet{2, 4}, IndexSet{1, 3}) == 1);
}

TEST_CASE("matrix json roundtrip keeps exact entries") {
  RationalMatrix m = random_matrix(IndexSet{2, 4}, IndexSet{1, 3, 9}, 71, true);
  CHECK(RationalMatrix::from_json(m.to_json()) == m);
}

TEST_CASE("row span utilities") {
  RationalMatrix m(IndexSet{1, 2}, IndexSet::interval(1, 4));
  m.set(1, 1, 1);
  m.set(1, 2, 2);
  m.set(2, 3, 1);
  RationalMatrix scaled = m.scale_row(1, rat_of(5));
  CHECK(m.same_row_span(scaled));
  CHECK(m.rowspan_intersect_support(IndexSet{1, 2}).row_count() == 1);
  CHECK(m.rowspan_intersect_support(IndexSet{4}).row_count() == 0);
  std::vector<Rat> v = {rat_of(2), rat_of(4), rat_of(3), rat_of(0)};
  CHECK(m.row_span_contains(v));
  v[3] = 1;
  CHECK(!m.row_span_contains(v));
}
