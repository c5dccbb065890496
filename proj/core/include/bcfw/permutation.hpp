#pragma once

#include <set>
#include <string>
#include <vector>

#include "bcfw/index_set.hpp"

namespace bcfw {

// Bijection of a finite index set with black/white fixed points. White
// fixed points never occur for the positroids built here; the flag is kept
// so validators can assert their absence.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  static DecoratedPermutation identity(const IndexSet& domain);

  const IndexSet& domain() const { return domain_; }
  int apply(int x) const;
  int inverse(int x) const;

  void set_image(int x, int image);
  void set_white(int x, bool white = true);
  bool is_white(int x) const { return white_.count(x) > 0; }
  const std::set<int>& white_fixed() const { return white_; }

  // m is an anti-excedance if inverse(m) > m, or m is a white fixed point.
  std::vector<int> anti_excedances() const;

  // Composes cycles right-to-left (rightmost factor applied first); every
  // cycle (a b c ...) maps a->b->c->...->a.
  static DecoratedPermutation from_cycles(const IndexSet& domain,
                                          const std::vector<std::vector<int>>& cycles);

  std::vector<int> images() const;  // in domain order
  bool same_mapping(const DecoratedPermutation& o) const;
  bool operator==(const DecoratedPermutation& o) const;

  std::string two_line() const;

 private:
  IndexSet domain_;
  std::vector<int> image_;  // positional
  std::set<int> white_;
};

}  // namespace bcfw
