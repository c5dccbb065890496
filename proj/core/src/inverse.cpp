#include "bcfw/inverse.hpp"

#include <stdexcept>

namespace bcfw {

IntersectionResult intersection_vector(const RationalMatrix& y,
                                       const std::vector<std::vector<Rat>>& five_rows) {
  const std::size_t k = y.row_count();
  const std::size_t dim = k + 4;
  if (five_rows.size() != 5) throw std::invalid_argument("intersection_vector: need five rows");
  for (const auto& r : five_rows)
    if (r.size() != dim) throw std::invalid_argument("intersection_vector: row length mismatch");
  IntersectionResult out;
  bool any_nonzero = false;
  for (std::size_t omit = 0; omit < 5; ++omit) {
    RationalMatrix stacked(IndexSet::interval(1, static_cast<int>(dim)),
                           IndexSet::interval(1, static_cast<int>(dim)));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        stacked.set(static_cast<int>(r + 1), static_cast<int>(c + 1), y.at_pos(r, c));
    std::size_t w = k;
    for (std::size_t r = 0; r < 5; ++r) {
      if (r == omit) continue;
      for (std::size_t c = 0; c < dim; ++c)
        stacked.set(static_cast<int>(w + 1), static_cast<int>(c + 1), five_rows[r][c]);
      ++w;
    }
    Rat d = stacked.det();
    if (omit % 2 == 1) d = -d;
    if (sgn(d) != 0) any_nonzero = true;
    out.coefficients.push_back(d);
  }
  if (!any_nonzero) throw std::domain_error("intersection_vector: all five determinants vanish");
  out.vector_in_span.assign(dim, Rat(0));
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      out.vector_in_span[c] += out.coefficients[r] * five_rows[r][c];
  return out;
}

RationalMatrix invert_point(const ChordDiagram& diagram, const RationalMatrix& y,
                            const PositiveZ& z, ReconstructionTrace* trace) {
  const int k = diagram.k();
  const int n = diagram.n();
  if (!(diagram.markers() == IndexSet::interval(1, n)))
    throw std::invalid_argument("invert_point: standard marker set required");
  if (static_cast<int>(y.row_count()) != k || static_cast<int>(y.col_count()) != k + 4)
    throw std::invalid_argument("invert_point: Y must be k x (k+4)");
  auto st = diagram.stats();
  RationalMatrix c_mat(IndexSet::interval(1, k), diagram.markers());
  // Pure tail variables per reconstructed row; a sticky parent's raw entry
  // at its first tail marker also carries the domino it inherits, so the
  // children must combine with (alpha, beta), not with the raw entries.
  std::vector<Rat> alpha(static_cast<std::size_t>(k)), beta(static_cast<std::size_t>(k));
  auto z_row = [&](int m) {
    std::vector<Rat> row;
    for (int col = 1; col <= z.k() + 4; ++col) row.push_back(z.entry(m, col));
    return row;
  };
  for (int l = 0; l < k; ++l) {
    const Chord& c = diagram.chord(l);
    const ChordStats& s = st[static_cast<std::size_t>(l)];
    std::vector<std::vector<Rat>> basis;
    if (s.is_top) {
      basis = {z_row(c.i), z_row(c.i + 1), z_row(c.j), z_row(c.j + 1), z_row(n)};
    } else {
      const Chord& p = diagram.chord(s.parent);
      const Rat t1 = alpha[static_cast<std::size_t>(s.parent)];
      const Rat t2 = beta[static_cast<std::size_t>(s.parent)];
      std::vector<Rat> combined = z_row(p.i);
      std::vector<Rat> second = z_row(p.i + 1);
      for (std::size_t col = 0; col < combined.size(); ++col)
        combined[col] = t1 * combined[col] + t2 * second[col];
      basis = {combined, z_row(c.i), z_row(c.i + 1), z_row(c.j), z_row(c.j + 1)};
    }
    IntersectionResult res;
    try {
      res = intersection_vector(y, basis);
    } catch (const std::domain_error&) {
      throw std::domain_error("invert_point: required twistor vanishes, not in this cell's interior image");
    }
    if (trace) trace->rows.push_back({l, res.coefficients});
    // Assemble the row of C in R^n from the basis coefficients.
    std::vector<Rat> row(static_cast<std::size_t>(n), Rat(0));
    auto add = [&row](int marker, const Rat& v) { row[static_cast<std::size_t>(marker - 1)] += v; };
    std::size_t first_plain;
    if (s.is_top) {
      add(c.i, res.coefficients[0]);
      first_plain = 1;
    } else {
      const Chord& p = diagram.chord(s.parent);
      add(p.i, res.coefficients[0] * alpha[static_cast<std::size_t>(s.parent)]);
      add(p.i + 1, res.coefficients[0] * beta[static_cast<std::size_t>(s.parent)]);
      first_plain = 1;
    }
    std::vector<int> plain = s.is_top ? std::vector<int>{c.i + 1, c.j, c.j + 1, n}
                                      : std::vector<int>{c.i, c.i + 1, c.j, c.j + 1};
    for (std::size_t p = 0; p < plain.size(); ++p)
      add(plain[p], res.coefficients[first_plain + p]);
    // Normalize so the beta entry (second tail marker) is one.
    Rat beta_raw = row[static_cast<std::size_t>(c.i)];
    if (sgn(beta_raw) == 0)
      throw std::domain_error("invert_point: beta entry vanishes, not in this cell's interior image");
    for (auto& v : row) v /= beta_raw;
    for (int m = 1; m <= n; ++m) c_mat.set(l + 1, m, row[static_cast<std::size_t>(m - 1)]);
    beta[static_cast<std::size_t>(l)] = 1;
    if (s.is_top) {
      alpha[static_cast<std::size_t>(l)] = row[static_cast<std::size_t>(c.i - 1)];
    } else if (s.is_sticky_child) {
      const Chord& p = diagram.chord(s.parent);
      if (sgn(alpha[static_cast<std::size_t>(s.parent)]) == 0)
        throw std::domain_error("invert_point: parent alpha vanishes, not in this cell's interior image");
      Rat eps = row[static_cast<std::size_t>(p.i - 1)] / alpha[static_cast<std::size_t>(s.parent)];
      alpha[static_cast<std::size_t>(l)] =
          row[static_cast<std::size_t>(c.i - 1)] - eps * beta[static_cast<std::size_t>(s.parent)];
    } else {
      alpha[static_cast<std::size_t>(l)] = row[static_cast<std::size_t>(c.i - 1)];
    }
  }
  SignRuleReport rep = check_sign_rules(c_mat, diagram);
  if (!rep.ok)
    throw std::domain_error("invert_point: sign rules fail (" + rep.message +
                            "), not in this cell's interior image");
  if (k > 0 && !amap(c_mat, z).same_row_span(y))
    throw std::domain_error("invert_point: reconstruction does not map back to Y");
  return c_mat;
}

std::optional<ChordDiagram> identify_cell(const RationalMatrix& y, const PositiveZ& z, int n,
                                          int k) {
  std::optional<ChordDiagram> accepted;
  for (const ChordDiagram& d : enumerate_diagrams(n, k)) {
    bool ok = true;
    try {
      invert_point(d, y, z);
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (ok) {
      if (accepted)
        throw std::logic_error("identify_cell: two cells accept one point, separation violated");
      accepted = d;
    }
  }
  return accepted;
}

}  // namespace bcfw
