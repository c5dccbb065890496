#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bcfw {

// Exact rational scalar. Every numeric quantity in this library is a Rat;
// there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q".
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace bcfw
