#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bcfw/rational.hpp"

namespace bcfw {

// A twistor symbol <i1 i2 i3 i4> in canonical (sorted) form. Canonicalizing
// an ordered tuple yields a sign; tuples with repeated indices are zero.
struct TwistorSymbol {
  std::array<int, 4> idx{};
  auto operator<=>(const TwistorSymbol&) const = default;
};

// sign = 0 means the symbol vanishes identically (repeated index).
struct CanonicalSymbol {
  TwistorSymbol symbol;
  int sign = 0;
};
CanonicalSymbol canonicalize_symbol(const std::array<int, 4>& ordered);

// Exact multivariate polynomial in twistor symbols, stored as a map from
// sorted monomials to rational coefficients. All arithmetic keeps the
// canonical form, so equality and purity checks are syntactic.
class Functionary {
 public:
  using Monomial = std::vector<TwistorSymbol>;  // sorted
  using TermMap = std::map<Monomial, Rat>;

  Functionary() = default;

  // Single twistor with sign from canonical ordering.
  static Functionary twistor(const std::array<int, 4>& ordered);

  void add_term(Monomial monomial, const Rat& coeff);
  // Multiplies a monomial built from an ordered tuple into every term.
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;  // of the first monomial; terms are homogeneous

  Functionary plus(const Functionary& o) const;
  Functionary times(const Functionary& o) const;
  Functionary scaled(const Rat& c) const;
  Functionary negated() const { return scaled(Rat(-1)); }

  bool operator==(const Functionary& o) const { return terms_ == o.terms_; }

  // Pure: all monomials carry the same index multiset.
  bool is_pure() const;
  std::vector<int> type() const;       // sorted index multiset of a monomial
  int multiplicity(int index) const;   // d_i of a pure functionary

  // "+1*<1 4 5 9>*<2 7 8 9> -1*<2 4 5 9>*<1 7 8 9>"
  std::string to_text() const;
  static Functionary parse_text(const std::string& text);
  std::string to_json() const;
  static Functionary from_json(const std::string& text);

 private:
  TermMap terms_;
};

// The two-term pure quadratic <<i i' | j j' | h h' | l>> =
// <i j j' l><i' h h' l> - <i' j j' l><i h h' l>.
Functionary favorite(int i, int i2, int j, int j2, int h, int h2, int l);

}  // namespace bcfw
