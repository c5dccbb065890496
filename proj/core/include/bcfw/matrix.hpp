#pragma once

#include <string>
#include <vector>

#include "bcfw/index_set.hpp"
#include "bcfw/rational.hpp"

namespace bcfw {

// Embedding parameters for iota: t_1..t_l on the predecessor side and
// s_1..s_r on the successor side, all positive for interior points.
struct EmbeddingParams {
  std::vector<Rat> t;
  std::vector<Rat> s;
};

// Exact rational matrix whose rows and columns are indexed by arbitrary
// finite sets of positive integers. Values are immutable in spirit: all
// operations return new matrices.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(IndexSet rows, IndexSet cols);

  static RationalMatrix identity(const IndexSet& idx);

  const IndexSet& rows() const { return rows_; }
  const IndexSet& cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  const Rat& at(int row, int col) const;
  void set(int row, int col, const Rat& value);
  const Rat& at_pos(std::size_t r, std::size_t c) const { return data_[r][c]; }
  void set_pos(std::size_t r, std::size_t c, const Rat& v) { data_[r][c] = v; }

  std::vector<Rat> row_values(int row) const;

  bool operator==(const RationalMatrix& o) const;

  // ------------------------------------------------------------------
  // The positivity-preserving operations.

  // Inserts a zero column at the new index i.
  RationalMatrix pre(int i) const;

  // Inserts a unit column at i and a new row at j whose single 1 sits at
  // (j, i); entries with exactly one of (row > j, col > i) are negated.
  RationalMatrix inc(int i, int j) const;

  // Adds t times column i to column succ(i). In the overflow case
  // i == max the multiple is scaled by (-1)^(k-1), k = number of rows.
  RationalMatrix x_op(int i, const Rat& t) const;

  // Adds t times column succ(i) to column i, same overflow rule.
  RationalMatrix y_op(int i, const Rat& t) const;

  // inc at i followed by x's to the successor side (s_1..s_r) and y's to
  // the predecessor side (t_1..t_l). Parameters must be nonnegative and
  // l + r <= number of existing columns.
  RationalMatrix iota(int i, const EmbeddingParams& params) const;

  // Column/row manipulation helpers used by the exact inversion routines.
  RationalMatrix restrict_cols(const IndexSet& cols) const;
  RationalMatrix restrict_rows(const IndexSet& rows) const;
  RationalMatrix scale_col(int col, const Rat& factor) const;
  RationalMatrix add_col_multiple(int target, int source, const Rat& factor) const;
  // Removes column `from` and re-adds its values under the new index `to`
  // scaled by `factor`.
  RationalMatrix move_col(int from, int to, const Rat& factor) const;
  RationalMatrix stack(const RationalMatrix& below) const;
  RationalMatrix scale_row(int row, const Rat& factor) const;

  // ------------------------------------------------------------------
  // Exact linear algebra.

  // Determinant of the square matrix (throws if not square).
  Rat det() const;

  // Pluecker coordinate P_I: determinant of the column minor I taken in
  // increasing order; |I| must equal the row count.
  Rat pluecker(const IndexSet& I) const;

  // All k-subsets I of the columns with P_I != 0, in lexicographic order.
  std::vector<IndexSet> nonzero_pluecker_pattern() const;
  bool all_plueckers_nonnegative() const;

  std::size_t rank() const;

  // Basis (as a matrix over the same columns) of the vectors of the row
  // span supported on the column subset `support`.
  RationalMatrix rowspan_intersect_support(const IndexSet& support) const;

  bool same_row_span(const RationalMatrix& other) const;
  // True if v (indexed by cols()) lies in the row span.
  bool row_span_contains(const std::vector<Rat>& v) const;

  // ------------------------------------------------------------------
  // {"rows":[...],"cols":[...],"entries":[[r,c,"p/q"],...]}, zero entries
  // omitted.
  std::string to_json() const;
  static RationalMatrix from_json(const std::string& text);

  std::string str() const;

 private:
  IndexSet rows_;
  IndexSet cols_;
  std::vector<std::vector<Rat>> data_;  // positional, rows x cols
};

// Block matrix of the middle embedding Upsilon_j(s1,s2,t1,t2,L,R):
// L over ([j+1] u {n}) with k1 rows, R over {j..n-1} with k2 rows,
// subject to k1+k2 <= n-5, k1 <= j-2, k2 <= n-j-4 and positive s,t.
RationalMatrix middle_embedding(int j, const Rat& s1, const Rat& s2, const Rat& t1,
                                const Rat& t2, const RationalMatrix& L,
                                const RationalMatrix& R);

// Parity-of-inversions sign s(J,I) = (-1)^|{(i,j): i in I, j in J, i < j}|.
int cauchy_binet_sign(const IndexSet& J, const IndexSet& I);

// All k-subsets of the given set, lexicographic.
std::vector<IndexSet> subsets_of_size(const IndexSet& set, std::size_t k);

}  // namespace bcfw
