#include "bcfw/separation.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "bcfw/domino.hpp"
#include "bcfw/prng.hpp"

namespace bcfw {

namespace {

// One way to rewrite an index inside a twistor symbol: multiply the
// monomial by `bracket` (already canonical) and substitute `replacement`.
struct Rewrite {
  int coeff;
  bool has_bracket = false;
  TwistorSymbol bracket;
  int replacement;
};

Functionary substitute(const Functionary& f,
                       const std::function<std::vector<Rewrite>(int)>& rules) {
  Functionary out;
  for (const auto& [mono, coeff] : f.terms()) {
    // Expand the monomial symbol by symbol, index by index.
    struct Partial {
      Rat coeff;
      Functionary::Monomial symbols;
      std::array<int, 4> current{};
      std::size_t sym = 0;
      int pos = 0;
    };
    std::vector<Partial> stack;
    stack.push_back({coeff, {}, {}, 0, 0});
    while (!stack.empty()) {
      Partial p = std::move(stack.back());
      stack.pop_back();
      if (p.sym == mono.size()) {
        out.add_term(std::move(p.symbols), p.coeff);
        continue;
      }
      if (p.pos == 4) {
        CanonicalSymbol c = canonicalize_symbol(p.current);
        if (c.sign == 0) continue;
        Partial next;
        next.coeff = p.coeff * Rat(c.sign);
        next.symbols = std::move(p.symbols);
        next.symbols.push_back(c.symbol);
        next.sym = p.sym + 1;
        next.pos = 0;
        stack.push_back(std::move(next));
        continue;
      }
      int index = mono[p.sym].idx[static_cast<std::size_t>(p.pos)];
      for (const Rewrite& r : rules(index)) {
        Partial next = p;
        next.coeff *= Rat(r.coeff);
        if (r.has_bracket) next.symbols.push_back(r.bracket);
        next.current[static_cast<std::size_t>(p.pos)] = r.replacement;
        ++next.pos;
        stack.push_back(std::move(next));
      }
    }
  }
  return out;
}

TwistorSymbol sym_of(std::array<int, 4> ordered) {
  CanonicalSymbol c = canonicalize_symbol(ordered);
  if (c.sign != 1) throw std::logic_error("bracket tuple not in canonical order");
  return c.symbol;
}

Functionary promote_E_general(const Functionary& f, int i, int p, int n) {
  TwistorSymbol b_ppn = sym_of({i, i + 1, p, n});       // <i,i+1,n-2,n>
  TwistorSymbol b_p1n = sym_of({i, i + 1, p + 1, n});   // <i,i+1,n-1,n>
  TwistorSymbol b_pp1 = sym_of({i, i + 1, p, p + 1});   // <i,i+1,n-2,n-1>
  auto rules = [&](int index) -> std::vector<Rewrite> {
    if (index == p + 1)
      return {{1, true, b_ppn, p + 1}, {-1, true, b_p1n, p}};
    if (index == n)
      return {{1, true, b_pp1, n}, {-1, true, b_ppn, p + 1}, {1, true, b_p1n, p}};
    return {{1, false, {}, index}};
  };
  return substitute(f, rules);
}

Functionary promote_F_general(const Functionary& f, int i, int p, int n) {
  TwistorSymbol b_i = sym_of({i, p, p + 1, n});      // <i,n-2,n-1,n>
  TwistorSymbol b_i1 = sym_of({i + 1, p, p + 1, n});  // <i+1,n-2,n-1,n>
  auto rules = [&](int index) -> std::vector<Rewrite> {
    if (index == i + 1) return {{1, true, b_i, i + 1}, {-1, true, b_i1, i}};
    return {{1, false, {}, index}};
  };
  return substitute(f, rules);
}

Separator separate_rec(const ChordDiagram& da, const ChordDiagram& db) {
  const IndexSet& markers = da.markers();
  const int n = markers.max();

  // (A) one diagram is trivial.
  if (da.k() == 0 || db.k() == 0) {
    const ChordDiagram& full = da.k() > 0 ? da : db;
    int last_top = full.top_chords().back();
    const Chord& c = full.chord(last_top);
    Separator out;
    out.functionary = Functionary::twistor({c.i, c.i + 1, c.j, n});
    out.sign_a = (da.k() > 0) ? -1 : 1;
    out.sign_b = -out.sign_a;
    return out;
  }

  // (B) strip the smallest marker unused by both diagrams.
  {
    auto used_a = da.used_markers();
    auto used_b = db.used_markers();
    for (int h : markers) {
      if (h == n) continue;
      bool in_a = std::binary_search(used_a.begin(), used_a.end(), h);
      bool in_b = std::binary_search(used_b.begin(), used_b.end(), h);
      if (!in_a && !in_b) return separate_rec(da.strip_marker(h), db.strip_marker(h));
    }
  }

  const int p1 = markers.pred(n);   // n(-)1
  const int p2 = markers.pred(p1);  // n(-)2
  auto ending_top = [&](const ChordDiagram& d) -> int {
    for (int l = 0; l < d.k(); ++l)
      if (d.chord(l).j == p2 && d.chord(l).j + 1 == p1) return l;  // outermost: smallest index
    return -1;
  };
  int ta = ending_top(da);
  int tb = ending_top(db);

  // (C) exactly one diagram uses the marker n(-)1.
  if ((ta == -1) != (tb == -1)) {
    const ChordDiagram& with = ta != -1 ? da : db;
    const Chord& c = with.chord(ta != -1 ? ta : tb);
    Separator out;
    out.functionary = Functionary::twistor({c.i, c.i + 1, p2, n});
    out.sign_a = (ta != -1) ? -1 : 1;
    out.sign_b = -out.sign_a;
    return out;
  }
  if (ta == -1) throw std::logic_error("separator: dead marker survived case B");

  const Chord& ca = da.chord(ta);
  const Chord& cb = db.chord(tb);

  // (D) both last top chords end at (n-2, n-1) with different tails.
  if (ca.i != cb.i) {
    Separator out;
    out.functionary = favorite(ca.i, ca.i + 1, cb.i, cb.i + 1, p2, p1, n);
    out.sign_a = -1;
    out.sign_b = 1;
    return out;
  }

  const int i = ca.i;
  // (E) same last top chord, different descendant subdiagrams.
  ChordDiagram desc_a = da.induced(markers.slice(i + 1, n));
  ChordDiagram desc_b = db.induced(markers.slice(i + 1, n));
  if (!(desc_a == desc_b)) {
    Separator sub = separate_rec(desc_a, desc_b);
    Separator out;
    out.functionary = promote_E_general(sub.functionary, i, p2, n);
    int flips = sub.functionary.multiplicity(p1);
    out.sign_a = sub.sign_a * (flips % 2 == 0 ? 1 : -1);
    out.sign_b = -out.sign_a;
    return out;
  }

  // (F) same last subdiagram; recurse on the chords before it.
  ChordDiagram before_a = da.induced(markers.slice(1, i + 1).with(n));
  ChordDiagram before_b = db.induced(markers.slice(1, i + 1).with(n));
  if (before_a == before_b) throw std::logic_error("separator: diagrams are equal");
  Separator sub = separate_rec(before_a, before_b);
  Separator out;
  out.functionary = promote_F_general(sub.functionary, i, p2, n);
  int below = da.stats()[static_cast<std::size_t>(ta)].below;
  int kprime = 1 + below;
  int d = sub.functionary.multiplicity(i + 1) + sub.functionary.multiplicity(n);
  out.sign_a = sub.sign_a * ((kprime * d) % 2 == 0 ? 1 : -1);
  out.sign_b = -out.sign_a;
  return out;
}

}  // namespace

Separator separator(const ChordDiagram& diagram_a, const ChordDiagram& diagram_b) {
  if (!(diagram_a.markers() == diagram_b.markers()))
    throw std::invalid_argument("separator: marker sets differ");
  if (diagram_a == diagram_b) throw std::invalid_argument("separator: diagrams are equal");
  Separator out = separate_rec(diagram_a, diagram_b);
  if (!out.functionary.is_pure()) throw std::logic_error("separator: output is not pure");
  return out;
}

Functionary promote_case_E(const Functionary& f, int i, int n) {
  return promote_E_general(f, i, n - 2, n);
}

Functionary promote_case_F(const Functionary& f, int i, int n) {
  return promote_F_general(f, i, n - 2, n);
}

SeparationCheck verify_separator(const ChordDiagram& diagram_a, const ChordDiagram& diagram_b,
                                 const Separator& sep, std::uint64_t seed, int samples, int zs) {
  SeparationCheck out;
  const int n = diagram_a.n();
  auto run = [&](const ChordDiagram& d, int expected, const char* tag) {
    auto panel = z_panel(n, d.k(), zs, mix_seed(seed, 7));
    for (int s = 0; s < samples && out.ok; ++s) {
      RationalMatrix c = sample_cell(d, mix_seed(seed, 100 + static_cast<std::uint64_t>(s)));
      for (const PositiveZ& z : panel) {
        Rat v = eval_functionary(sep.functionary, amap(c, z), z);
        ++out.evaluations;
        if (sgn(v) != expected) {
          std::ostringstream os;
          os << "separator sign mismatch on " << tag << " sample " << s << ": expected " << expected
             << " got " << sgn(v);
          out.failure = os.str();
          out.ok = false;
          break;
        }
      }
    }
  };
  run(diagram_a, sep.sign_a, "a");
  run(diagram_b, sep.sign_b, "b");
  return out;
}

}  // namespace bcfw
