#include "bcfw/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bcfw {

namespace {

const Rat kZero = 0;

// Fraction-free Bareiss determinant of an integer matrix (positional).
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (mpz_sgn(m[k][k].get_mpz_t()) == 0) {
      std::size_t p = k + 1;
      while (p < n && mpz_sgn(m[p][k].get_mpz_t()) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Clears denominators row by row, then runs integer Bareiss.
Rat det_of(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> zm(n, std::vector<Int>(n));
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = m[i][j] * Rat(lcm);
      zm[i][j] = scaled.get_num();  // exact: denominator is 1
    }
    scale /= Rat(lcm);
  }
  Rat d = Rat(bareiss_det(std::move(zm))) * scale;
  d.canonicalize();
  return d;
}

void subsets_rec(const std::vector<int>& pool, std::size_t k, std::size_t from,
                 std::vector<int>& cur, std::vector<IndexSet>& out) {
  if (cur.size() == k) {
    out.push_back(IndexSet(cur));
    return;
  }
  for (std::size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_rec(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexSet> subsets_of_size(const IndexSet& set, std::size_t k) {
  std::vector<IndexSet> out;
  std::vector<int> cur;
  subsets_rec(set.elements(), k, 0, cur, out);
  return out;
}

RationalMatrix::RationalMatrix(IndexSet rows, IndexSet cols)
    : rows_(std::move(rows)), cols_(std::move(cols)),
      data_(rows_.size(), std::vector<Rat>(cols_.size(), kZero)) {}

RationalMatrix RationalMatrix::identity(const IndexSet& idx) {
  RationalMatrix m(idx, idx);
  for (std::size_t i = 0; i < idx.size(); ++i) m.data_[i][i] = 1;
  return m;
}

const Rat& RationalMatrix::at(int row, int col) const {
  return data_[rows_.position(row)][cols_.position(col)];
}

void RationalMatrix::set(int row, int col, const Rat& value) {
  data_[rows_.position(row)][cols_.position(col)] = value;
}

std::vector<Rat> RationalMatrix::row_values(int row) const {
  return data_[rows_.position(row)];
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::pre(int i) const {
  RationalMatrix out(rows_, cols_.with(i));
  std::size_t ci = out.cols_.position(i);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      out.data_[r][c + (c >= ci ? 1 : 0)] = data_[r][c];
  return out;
}

RationalMatrix RationalMatrix::inc(int i, int j) const {
  RationalMatrix out(rows_.with(j), cols_.with(i));
  std::size_t ri = out.rows_.position(j);
  std::size_t ci = out.cols_.position(i);
  out.data_[ri][ci] = 1;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      bool row_after = rows_.at(r) > j;
      bool col_after = cols_.at(c) > i;
      Rat v = data_[r][c];
      if (row_after != col_after) v = -v;
      out.data_[r + (r >= ri ? 1 : 0)][c + (c >= ci ? 1 : 0)] = v;
    }
  }
  return out;
}

RationalMatrix RationalMatrix::x_op(int i, const Rat& t) const {
  int target = cols_.succ(i);
  Rat factor = t;
  if (i == cols_.max() && rows_.size() % 2 == 0) factor = -factor;
  return add_col_multiple(target, i, factor);
}

RationalMatrix RationalMatrix::y_op(int i, const Rat& t) const {
  int source = cols_.succ(i);
  Rat factor = t;
  if (i == cols_.max() && rows_.size() % 2 == 0) factor = -factor;
  return add_col_multiple(i, source, factor);
}

RationalMatrix RationalMatrix::iota(int i, const EmbeddingParams& params) const {
  const std::size_t l = params.t.size();
  const std::size_t r = params.s.size();
  if (l + r > cols_.size()) throw std::invalid_argument("iota: l + r exceeds column count");
  for (const Rat& v : params.t)
    if (sgn(v) < 0) throw std::invalid_argument("iota: negative parameter");
  for (const Rat& v : params.s)
    if (sgn(v) < 0) throw std::invalid_argument("iota: negative parameter");
  int new_row = rows_.empty() ? 1 : rows_.max() + 1;
  RationalMatrix m = inc(i, new_row);
  int col = i;
  for (std::size_t p = 0; p < r; ++p) {
    m = m.x_op(col, params.s[p]);
    col = m.cols().succ(col);
  }
  col = m.cols().pred(i);
  for (std::size_t p = 0; p < l; ++p) {
    m = m.y_op(col, params.t[p]);
    col = m.cols().pred(col);
  }
  return m;
}

RationalMatrix RationalMatrix::restrict_cols(const IndexSet& cols) const {
  RationalMatrix out(rows_, cols);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out.data_[r][c] = at(rows_.at(r), cols.at(c));
  return out;
}

RationalMatrix RationalMatrix::restrict_rows(const IndexSet& rows) const {
  RationalMatrix out(rows, cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.data_[r] = data_[rows_.position(rows.at(r))];
  return out;
}

RationalMatrix RationalMatrix::scale_col(int col, const Rat& factor) const {
  RationalMatrix out = *this;
  std::size_t c = cols_.position(col);
  for (auto& row : out.data_) row[c] *= factor;
  return out;
}

RationalMatrix RationalMatrix::add_col_multiple(int target, int source, const Rat& factor) const {
  RationalMatrix out = *this;
  std::size_t ct = cols_.position(target);
  std::size_t cs = cols_.position(source);
  for (auto& row : out.data_) row[ct] += factor * row[cs];
  return out;
}

RationalMatrix RationalMatrix::move_col(int from, int to, const Rat& factor) const {
  std::size_t cf = cols_.position(from);
  RationalMatrix out(rows_, cols_.without(from).with(to));
  std::size_t ct = out.cols_.position(to);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t w = 0;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (c == cf) continue;
      std::size_t dst = w >= ct ? w + 1 : w;
      out.data_[r][dst] = data_[r][c];
      ++w;
    }
    out.data_[r][ct] = factor * data_[r][cf];
  }
  return out;
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& below) const {
  if (!(cols_ == below.cols_)) throw std::invalid_argument("stack: column sets differ");
  std::vector<int> rows = rows_.elements();
  for (int r : below.rows_.elements()) rows.push_back(r);
  RationalMatrix out(IndexSet(rows), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      out.set(rows_.at(r), cols_.at(c), data_[r][c]);
  for (std::size_t r = 0; r < below.rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      out.set(below.rows_.at(r), cols_.at(c), below.data_[r][c]);
  return out;
}

RationalMatrix RationalMatrix::scale_row(int row, const Rat& factor) const {
  RationalMatrix out = *this;
  std::size_t r = rows_.position(row);
  for (auto& v : out.data_[r]) v *= factor;
  return out;
}

Rat RationalMatrix::det() const {
  if (rows_.size() != cols_.size()) throw std::invalid_argument("det: not square");
  return det_of(data_);
}

Rat RationalMatrix::pluecker(const IndexSet& I) const {
  if (I.size() != rows_.size()) throw std::invalid_argument("pluecker: |I| != row count");
  std::vector<std::vector<Rat>> minor(rows_.size(), std::vector<Rat>(rows_.size()));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < I.size(); ++c)
      minor[r][c] = data_[r][cols_.position(I.at(c))];
  return det_of(minor);
}

std::vector<IndexSet> RationalMatrix::nonzero_pluecker_pattern() const {
  std::vector<IndexSet> out;
  for (const IndexSet& I : subsets_of_size(cols_, rows_.size()))
    if (sgn(pluecker(I)) != 0) out.push_back(I);
  return out;
}

bool RationalMatrix::all_plueckers_nonnegative() const {
  for (const IndexSet& I : subsets_of_size(cols_, rows_.size()))
    if (sgn(pluecker(I)) < 0) return false;
  return true;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::vector<Rat>> m = data_;
  std::size_t rank = 0;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::rowspan_intersect_support(const IndexSet& support) const {
  // x * M must vanish on the complement columns; solve for the left kernel
  // of the complement block, then return the corresponding combinations.
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < cols_.size(); ++c)
    if (!support.contains(cols_.at(c))) comp.push_back(c);
  const std::size_t k = rows_.size();
  // Transposed system: columns are the k unknowns.
  std::vector<std::vector<Rat>> m(comp.size(), std::vector<Rat>(k));
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = data_[j][comp[i]];
  // Gauss elimination to reduced form, tracking pivot columns.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rat piv = m[row][c];
    for (auto& v : m[row]) v /= piv;
    for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == row || sgn(m[r2][c]) == 0) continue;
      Rat f = m[r2][c];
      for (std::size_t cc = 0; cc < k; ++cc) m[r2][cc] -= f * m[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(k, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  // One kernel vector per free column.
  std::vector<std::vector<Rat>> kernel;
  for (std::size_t c = 0; c < k; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> x(k, kZero);
    x[c] = 1;
    for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2) x[pivot_col[r2]] = -m[r2][c];
    kernel.push_back(std::move(x));
  }
  RationalMatrix out(IndexSet::interval(1, static_cast<int>(kernel.size())), cols_);
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      Rat v = 0;
      for (std::size_t j = 0; j < k; ++j) v += kernel[r][j] * data_[j][c];
      out.data_[r][c] = v;
    }
  return out;
}

bool RationalMatrix::same_row_span(const RationalMatrix& other) const {
  if (!(cols_ == other.cols_)) return false;
  std::size_t ra = rank();
  std::size_t rb = other.rank();
  if (ra != rb) return false;
  std::vector<int> rows;
  int next = 1;
  for (std::size_t i = 0; i < rows_.size() + other.rows_.size(); ++i) rows.push_back(next++);
  RationalMatrix both(IndexSet(rows), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) both.data_[r] = data_[r];
  for (std::size_t r = 0; r < other.rows_.size(); ++r) both.data_[rows_.size() + r] = other.data_[r];
  return both.rank() == ra;
}

bool RationalMatrix::row_span_contains(const std::vector<Rat>& v) const {
  if (v.size() != cols_.size()) throw std::invalid_argument("row_span_contains: size mismatch");
  std::vector<int> rows;
  for (std::size_t i = 0; i < rows_.size() + 1; ++i) rows.push_back(static_cast<int>(i + 1));
  RationalMatrix both(IndexSet(rows), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) both.data_[r] = data_[r];
  both.data_[rows_.size()] = v;
  return both.rank() == rank();
}

std::string RationalMatrix::to_json() const {
  nlohmann::json j;
  j["rows"] = rows_.elements();
  j["cols"] = cols_.elements();
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (sgn(data_[r][c]) != 0)
        entries.push_back({rows_.at(r), cols_.at(c), rat_str(data_[r][c])});
  j["entries"] = std::move(entries);
  return j.dump();
}

RationalMatrix RationalMatrix::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RationalMatrix m(IndexSet(j.at("rows").get<std::vector<int>>()),
                   IndexSet(j.at("cols").get<std::vector<int>>()));
  for (const auto& e : j.at("entries"))
    m.set(e.at(0).get<int>(), e.at(1).get<int>(), rat_parse(e.at(2).get<std::string>()));
  return m;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "rows " << rows_.str() << " cols " << cols_.str() << "\n";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (c) os << ' ';
      os << rat_str(data_[r][c]);
    }
    os << "\n";
  }
  return os.str();
}

RationalMatrix middle_embedding(int j, const Rat& s1, const Rat& s2, const Rat& t1,
                                const Rat& t2, const RationalMatrix& L,
                                const RationalMatrix& R) {
  const int k1 = static_cast<int>(L.row_count());
  const int k2 = static_cast<int>(R.row_count());
  if (sgn(s1) <= 0 || sgn(s2) <= 0 || sgn(t1) <= 0 || sgn(t2) <= 0)
    throw std::invalid_argument("middle_embedding: parameters must be positive");
  if (L.col_count() != static_cast<std::size_t>(j + 2))
    throw std::invalid_argument("middle_embedding: L must have columns [j+1] u {n}");
  const int n = L.cols().max();
  {
    IndexSet expected = IndexSet::interval(1, j + 1).with(n);
    if (!(L.cols() == expected)) throw std::invalid_argument("middle_embedding: bad L columns");
    if (!(R.cols() == IndexSet::interval(j, n - 1)))
      throw std::invalid_argument("middle_embedding: bad R columns");
  }
  if (!(k1 + k2 <= n - 5 && k1 <= j - 2 && k2 <= n - j - 4))
    throw std::invalid_argument("middle_embedding: dimension constraints violated");

  const Rat sign_k2 = (k2 % 2 == 0) ? Rat(1) : Rat(-1);
  RationalMatrix out(IndexSet::interval(1, k1 + k2 + 1), IndexSet::interval(1, n));
  // Top block: L with column j mixed by s1/s2, columns j+2..n-1 zero, and
  // column n scaled by (-1)^k2.
  for (int r = 0; r < k1; ++r) {
    int row = L.rows().at(r);
    for (int c = 1; c <= j - 1; ++c) out.set(r + 1, c, L.at(row, c));
    out.set(r + 1, j, L.at(row, j) + (s1 / s2) * L.at(row, j + 1));
    out.set(r + 1, j + 1, L.at(row, j + 1));
    out.set(r + 1, n, sign_k2 * L.at(row, n));
  }
  // Middle row v.
  out.set(k1 + 1, j, s1);
  out.set(k1 + 1, j + 1, s2);
  out.set(k1 + 1, n - 2, sign_k2 * t1);
  out.set(k1 + 1, n - 1, sign_k2 * t2);
  out.set(k1 + 1, n, sign_k2);
  // Bottom block: R with column j+1 mixed by s2/s1 and column n-2 mixed by
  // t1/t2.
  for (int r = 0; r < k2; ++r) {
    int row = R.rows().at(r);
    out.set(k1 + 2 + r, j, R.at(row, j));
    out.set(k1 + 2 + r, j + 1, R.at(row, j + 1) + (s2 / s1) * R.at(row, j));
    for (int c = j + 2; c <= n - 3; ++c) out.set(k1 + 2 + r, c, R.at(row, c));
    out.set(k1 + 2 + r, n - 2, R.at(row, n - 2) + (t1 / t2) * R.at(row, n - 1));
    out.set(k1 + 2 + r, n - 1, R.at(row, n - 1));
  }
  return out;
}

int cauchy_binet_sign(const IndexSet& J, const IndexSet& I) {
  long inversions = 0;
  for (int i : I)
    for (int j : J)
      if (i < j) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace bcfw
