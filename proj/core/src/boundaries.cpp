#include "bcfw/boundaries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bcfw/prng.hpp"

namespace bcfw {

std::string VarElement::str() const {
  std::ostringstream os;
  switch (kind) {
    case VarKind::EpsHat: os << "eps_hat"; break;
    case VarKind::Alpha: os << "alpha"; break;
    case VarKind::Beta: os << "beta"; break;
    case VarKind::GammaHat: os << "gamma_hat"; break;
    case VarKind::DeltaHat: os << "delta_hat"; break;
    case VarKind::Eta: os << "eta"; break;
    case VarKind::Theta: os << "theta"; break;
  }
  os << '(' << chord + 1;
  if (other >= 0) os << ',' << other + 1;
  os << ')';
  return os.str();
}

VarSets var_set(const ChordDiagram& diagram) {
  VarSets out;
  auto st = diagram.stats();
  const int k = diagram.k();
  for (int l = 0; l < k; ++l) {
    out.var1.push_back({VarKind::EpsHat, l, -1});
    out.var1.push_back({VarKind::Alpha, l, -1});
    out.var1.push_back({VarKind::Beta, l, -1});
    out.var1.push_back({VarKind::GammaHat, l, -1});
    out.var1.push_back({VarKind::DeltaHat, l, -1});
  }
  out.var_tilde = out.var1;
  for (int l = 0; l < k; ++l) {
    for (int m : st[static_cast<std::size_t>(l)].same_end_descendants)
      out.var_tilde.push_back({VarKind::Eta, l, m});
    for (int m : st[static_cast<std::size_t>(l)].head_to_tail_successors)
      out.var_tilde.push_back({VarKind::Theta, l, m});
  }
  // Var: eta only for parent/child, theta only for siblings, with the
  // corresponding single-variable exclusions.
  std::vector<bool> drop_delta(static_cast<std::size_t>(k), false);
  std::vector<bool> drop_gamma(static_cast<std::size_t>(k), false);
  std::vector<bool> drop_beta(static_cast<std::size_t>(k), false);
  std::vector<VarElement> minors;
  for (int l = 0; l < k; ++l) {
    const ChordStats& s = st[static_cast<std::size_t>(l)];
    if (s.same_end_child != -1) {
      minors.push_back({VarKind::Eta, l, s.same_end_child});
      drop_delta[static_cast<std::size_t>(l)] = true;
      drop_gamma[static_cast<std::size_t>(s.same_end_child)] = true;
    }
    for (int m : s.head_to_tail_successors) {
      bool siblings = st[static_cast<std::size_t>(m)].parent == s.parent;
      if (siblings) {
        minors.push_back({VarKind::Theta, l, m});
        drop_gamma[static_cast<std::size_t>(l)] = true;
        drop_beta[static_cast<std::size_t>(m)] = true;
      }
    }
  }
  for (int l = 0; l < k; ++l) {
    out.var.push_back({VarKind::EpsHat, l, -1});
    out.var.push_back({VarKind::Alpha, l, -1});
    if (!drop_beta[static_cast<std::size_t>(l)]) out.var.push_back({VarKind::Beta, l, -1});
    if (!drop_gamma[static_cast<std::size_t>(l)]) out.var.push_back({VarKind::GammaHat, l, -1});
    if (!drop_delta[static_cast<std::size_t>(l)]) out.var.push_back({VarKind::DeltaHat, l, -1});
  }
  out.var.insert(out.var.end(), minors.begin(), minors.end());
  return out;
}

namespace {

// Rebuilds a diagram with `remove` deleted, `add` inserted and the heads of
// `pushed` chords moved to end at new_head; returns the index of `add`.
ShiftResult rebuild(const ChordDiagram& d, int remove, Chord add, const std::vector<int>& pushed,
                    int pushed_head, const std::string& case_name) {
  std::vector<Chord> chords;
  for (int l = 0; l < d.k(); ++l) {
    if (l == remove) continue;
    Chord c = d.chord(l);
    if (std::find(pushed.begin(), pushed.end(), l) != pushed.end()) c.j = pushed_head;
    chords.push_back(c);
  }
  chords.push_back(add);
  ChordDiagram target(d.markers(), std::move(chords));
  int moved = -1;
  for (int l = 0; l < target.k(); ++l)
    if (target.chord(l) == add) moved = l;
  return {std::move(target), moved, case_name};
}

}  // namespace

std::optional<ShiftResult> shift(const ChordDiagram& diagram, int chord, ShiftKind kind) {
  const Chord c = diagram.chord(chord);
  const int n = diagram.n();
  const int h = c.i;
  const int l = c.j;
  auto st = diagram.stats();
  const ChordStats& s = st[static_cast<std::size_t>(chord)];
  auto starts_at = [&](int m) { return diagram.chord_starting_at(m) != -1; };
  auto enders = [&](int head) {  // chords other than `chord` ending at (head, head+1)
    std::vector<int> out;
    for (int m = 0; m < diagram.k(); ++m)
      if (m != chord && diagram.chord(m).j == head) out.push_back(m);
    return out;
  };

  switch (kind) {
    case ShiftKind::TailLeft: {
      if (h > 1 && !starts_at(h - 1) && enders(h).empty())
        return rebuild(diagram, chord, {h - 1, l}, {}, 0, "tail-left");
      return std::nullopt;
    }
    case ShiftKind::TailRight: {
      if (!s.is_short) {
        if (!starts_at(h + 1)) return rebuild(diagram, chord, {h + 1, l}, {}, 0, "tail-right");
        return std::nullopt;
      }
      if (l >= n - 2) return std::nullopt;
      int sib = diagram.chord_starting_at(l);
      auto above = enders(l);
      if (sib == -1 && above.empty())
        return rebuild(diagram, chord, {h + 1, h + 3}, {}, 0, "tail-right-short");
      if (sib != -1 && above.empty())
        return rebuild(diagram, chord, {h + 1, diagram.chord(sib).j}, {}, 0, "tail-right-short-sibling");
      if (sib == -1 && !above.empty())
        return rebuild(diagram, chord, {h + 1, h + 3}, above, h + 1, "tail-right-short-roll");
      return rebuild(diagram, chord, {h + 1, diagram.chord(sib).j}, above, h + 1,
                     "tail-right-short-roll-sibling");
    }
    case ShiftKind::HeadLeft: {
      if (!s.is_short) {
        if (s.same_end_descendants.empty())
          return rebuild(diagram, chord, {h, l - 1}, {}, 0, "head-left");
        int child = s.same_end_child;
        int cj = diagram.chord(child).i;  // the child's tail marker
        if (cj > h + 1) return rebuild(diagram, chord, {h, cj}, {}, 0, "head-left-to-child");
        // sticky same-end child
        auto below = enders(h);
        if (below.empty()) {
          if (h > 1 && !starts_at(h - 1))
            return rebuild(diagram, chord, {h - 1, h + 1}, {}, 0, "head-left-sticky");
          return std::nullopt;
        }
        if (h > 1)
          return rebuild(diagram, chord, {h - 1, h + 1}, below, h + 1, "head-left-sticky-roll");
        return std::nullopt;
      }
      auto below = enders(h);
      if (below.empty()) {
        if (h > 1 && !starts_at(h - 1) )
          return rebuild(diagram, chord, {h - 1, h + 1}, {}, 0, "head-left-short");
        return std::nullopt;
      }
      return rebuild(diagram, chord, {h - 1, h + 1}, below, h + 1, "head-left-short-roll");
    }
    case ShiftKind::HeadRight: {
      bool parent_same_end = s.parent != -1 && diagram.chord(s.parent).j == l;
      if (parent_same_end) return std::nullopt;
      int sib = diagram.chord_starting_at(l);
      bool sib_is_sibling = sib != -1 && st[static_cast<std::size_t>(sib)].parent == s.parent;
      if (sib == -1) {
        if (l < n - 2) return rebuild(diagram, chord, {h, l + 1}, {}, 0, "head-right");
        return std::nullopt;
      }
      if (sib_is_sibling)
        return rebuild(diagram, chord, {h, diagram.chord(sib).j}, {}, 0, "head-right-to-sibling");
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

// Symbolic replay of the generation algorithm: instead of matrix
// operations it records the permutation factors (x right-multiplies, y
// left-multiplies an adjacent transposition) while tracking the live index
// set. Replaying with the codim-1 modifications gives the decorated
// permutation of the stratum where `star` vanishes.
class PermReplay {
 public:
  PermReplay(const ChordDiagram& d, const VarElement& star, int target)
      : d_(d), st_(d.stats()), star_(star), target_(target), n_({d.n()}) {
    if (star_.kind == VarKind::GammaHat) deferred_ = d.chord(target_).j;
  }

  DecoratedPermutation run() {
    sub(d_.top_chords(), 1, d_.n());
    std::vector<std::vector<int>> cycles = left_;
    cycles.insert(cycles.end(), right_.begin(), right_.end());
    return DecoratedPermutation::from_cycles(d_.markers(), cycles);
  }

 private:
  void fill(int m) {
    if (m == deferred_) return;
    if (!n_.contains(m)) n_ = n_.with(m);
  }

  void x_factor(int j) { right_.push_back({j, n_.succ(j)}); }
  void y_factor(int j) { left_.insert(left_.begin(), {j, n_.succ(j)}); }

  void head(int l) {
    const Chord& c = d_.chord(l);
    const bool is_target = (l == target_);
    if (is_target && (star_.kind == VarKind::Beta || star_.kind == VarKind::Theta)) {
      // inc_i, y_{i(-)1}(s), x_i(v), x_h(w): the unit lands on the alpha
      // position and the beta column stays empty.
      n_ = n_.with(c.i);
      y_factor(n_.pred(c.i));
      x_factor(c.i);
      x_factor(c.j);
      return;
    }
    if (is_target && star_.kind == VarKind::GammaHat) {
      // The head column is inserted as a zero column instead of receiving
      // x_h(w); the v multiple lands one position later.
      n_ = n_.with(c.i + 1);
      x_factor(c.i + 1);
      n_ = n_.with(c.j);
      deferred_ = -1;
      y_factor(n_.pred(c.i + 1));
      return;
    }
    n_ = n_.with(c.i + 1);
    x_factor(c.i + 1);
    bool skip_w = is_target && (star_.kind == VarKind::DeltaHat || star_.kind == VarKind::Eta);
    if (!skip_w) x_factor(c.j);
    bool skip_s = is_target && star_.kind == VarKind::EpsHat;
    if (!skip_s) y_factor(n_.pred(c.i + 1));
  }

  void tail(int l) {
    if (st_[static_cast<std::size_t>(l)].is_sticky_child) return;
    int last = st_[static_cast<std::size_t>(l)].sticky_last;
    for (int h = l; h <= last; ++h) {
      bool skip = (h == target_) && (star_.kind == VarKind::Alpha || star_.kind == VarKind::Beta ||
                                     star_.kind == VarKind::Theta);
      if (!skip) y_factor(d_.chord(h).i);
    }
  }

  void sub(const std::vector<int>& siblings_ascending, int parent_tail, int parent_head) {
    int prev_tail = parent_head;
    for (auto it = siblings_ascending.rbegin(); it != siblings_ascending.rend(); ++it) {
      int l = *it;
      for (int m = prev_tail - 1; m >= d_.chord(l).j; --m) fill(m);
      head(l);
      sub(st_[static_cast<std::size_t>(l)].children, d_.chord(l).i, d_.chord(l).j);
      tail(l);
      prev_tail = d_.chord(l).i;
    }
    for (int m = prev_tail - 1; m >= parent_tail; --m) fill(m);
  }

  const ChordDiagram& d_;
  std::vector<ChordStats> st_;
  VarElement star_;
  int target_;
  IndexSet n_;
  int deferred_ = -1;
  std::vector<std::vector<int>> left_;
  std::vector<std::vector<int>> right_;
};

}  // namespace

DecoratedPermutation boundary_permutation(const ChordDiagram& diagram, const VarElement& star) {
  auto st = diagram.stats();
  int target = star.chord;
  if (star.kind == VarKind::Theta) target = star.other;
  if ((star.kind == VarKind::Beta || star.kind == VarKind::Theta) &&
      st[static_cast<std::size_t>(target)].is_sticky_child)
    throw std::invalid_argument("boundary_permutation: beta of a sticky child is out of scope");
  return PermReplay(diagram, star, target).run();
}

namespace {

int find_chord(const ChordDiagram& d, const Chord& c) {
  for (int l = 0; l < d.k(); ++l)
    if (d.chord(l) == c) return l;
  throw std::logic_error("find_chord: chord not present");
}

BoundaryClass sa(const VarElement& star, const std::string& rule) {
  BoundaryClass out;
  out.star = star;
  out.is_sa = true;
  out.rule = rule;
  return out;
}

BoundaryClass paired(const VarElement& star, ShiftResult shifted, VarElement partner_star,
                     const std::string& rule) {
  BoundaryClass out;
  out.star = star;
  out.is_sa = false;
  out.rule = rule + " [" + shifted.case_name + "]";
  out.partner = std::move(shifted.target);
  out.partner_star = partner_star;
  return out;
}

}  // namespace

std::vector<BoundaryClass> pair_boundaries(const ChordDiagram& diagram) {
  std::vector<BoundaryClass> out;
  auto st = diagram.stats();
  const int n = diagram.n();
  for (const VarElement& star : var_set(diagram).var) {
    const int idx = star.chord;
    const Chord c = diagram.chord(idx);
    const ChordStats& s = st[static_cast<std::size_t>(idx)];
    switch (star.kind) {
      case VarKind::EpsHat:
        out.push_back(sa(star, "eps-hat always S_dA"));
        break;
      case VarKind::Alpha: {
        if (!s.is_short) {
          if (s.is_sticky_parent) {
            out.push_back(sa(star, "alpha of a sticky parent"));
          } else {
            auto sh = shift(diagram, idx, ShiftKind::TailRight);
            if (!sh) throw std::logic_error("alpha: expected unobstructed tail-right shift");
            out.push_back(paired(star, *sh, {VarKind::Beta, sh->moved_chord, -1}, "alpha<->beta"));
          }
          break;
        }
        if (c.j == n - 2) {
          out.push_back(sa(star, "alpha of a short chord ending at (n-2,n-1)"));
          break;
        }
        auto sh = shift(diagram, idx, ShiftKind::TailRight);
        if (!sh) throw std::logic_error("alpha: expected a tail-right shift for a short chord");
        int starter = diagram.chord_starting_at(c.j);
        if (starter != -1) {
          const Chord partner_child = diagram.chord(starter);
          int child_idx = find_chord(sh->target, partner_child);
          out.push_back(paired(star, *sh, {VarKind::Eta, sh->moved_chord, child_idx}, "alpha<->eta"));
        } else {
          out.push_back(paired(star, *sh, {VarKind::DeltaHat, sh->moved_chord, -1}, "alpha<->delta"));
        }
        break;
      }
      case VarKind::Beta: {
        if (c.i == 1 || s.is_sticky_child) {
          out.push_back(sa(star, "beta at (1,2) or of a sticky child"));
          break;
        }
        auto sh = shift(diagram, idx, ShiftKind::TailLeft);
        if (!sh) throw std::logic_error("beta: expected unobstructed tail-left shift");
        out.push_back(paired(star, *sh, {VarKind::Alpha, sh->moved_chord, -1}, "beta<->alpha"));
        break;
      }
      case VarKind::GammaHat: {
        if (c.j == n - 2) {
          out.push_back(sa(star, "gamma-hat of a chord ending at (n-2,n-1)"));
          break;
        }
        auto sh = shift(diagram, idx, ShiftKind::HeadRight);
        if (!sh) throw std::logic_error("gamma-hat: expected unobstructed head-right shift");
        out.push_back(paired(star, *sh, {VarKind::DeltaHat, sh->moved_chord, -1}, "gamma<->delta"));
        break;
      }
      case VarKind::DeltaHat: {
        if (!s.is_short) {
          auto sh = shift(diagram, idx, ShiftKind::HeadLeft);
          if (!sh) throw std::logic_error("delta-hat: expected unobstructed head-left shift");
          out.push_back(paired(star, *sh, {VarKind::GammaHat, sh->moved_chord, -1}, "delta<->gamma"));
          break;
        }
        if (c.i == 1 || s.is_sticky_child) {
          out.push_back(sa(star, "delta-hat of a short chord at (1,2) or sticky child"));
          break;
        }
        auto sh = shift(diagram, idx, ShiftKind::HeadLeft);
        if (!sh) throw std::logic_error("delta-hat: expected a head-left shift for a short chord");
        out.push_back(paired(star, *sh, {VarKind::Alpha, sh->moved_chord, -1}, "delta<->alpha"));
        break;
      }
      case VarKind::Eta: {
        bool child_sticky = st[static_cast<std::size_t>(star.other)].is_sticky_child &&
                            diagram.chord(star.other).i == c.i + 1;
        if (child_sticky) {
          if (c.i == 1 || s.is_sticky_child) {
            out.push_back(sa(star, "eta with a sticky same-end child, tail blocked"));
            break;
          }
          auto sh = shift(diagram, idx, ShiftKind::HeadLeft);
          if (!sh) throw std::logic_error("eta: expected head-left shift in the sticky case");
          out.push_back(paired(star, *sh, {VarKind::Alpha, sh->moved_chord, -1}, "eta<->alpha"));
          break;
        }
        auto sh = shift(diagram, idx, ShiftKind::HeadLeft);
        if (!sh) throw std::logic_error("eta: expected obstructed head-left shift");
        int tail_idx = find_chord(sh->target, diagram.chord(star.other));
        out.push_back(paired(star, *sh, {VarKind::Theta, sh->moved_chord, tail_idx}, "eta<->theta"));
        break;
      }
      case VarKind::Theta: {
        auto sh = shift(diagram, idx, ShiftKind::HeadRight);
        if (!sh) throw std::logic_error("theta: expected obstructed head-right shift");
        int child_idx = find_chord(sh->target, diagram.chord(star.other));
        out.push_back(paired(star, *sh, {VarKind::Eta, sh->moved_chord, child_idx}, "theta<->eta"));
        break;
      }
    }
  }
  return out;
}

RationalMatrix sa_witness(const ChordDiagram& diagram, const VarElement& star, std::uint64_t seed) {
  auto st = diagram.stats();
  for (int attempt = 0; attempt < 64; ++attempt) {
    RationalMatrix m = sample_cell(diagram, mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    SignRuleReport rep = check_sign_rules(m, diagram);
    if (!rep.ok) throw std::logic_error("sa_witness: sampled point fails the sign rules");
    DominoAssignment a = rep.assignment;
    std::size_t i = static_cast<std::size_t>(star.chord);
    switch (star.kind) {
      case VarKind::EpsHat: a.epsilon[i] = 0; break;
      case VarKind::Alpha: a.alpha[i] = 0; break;
      case VarKind::Beta: a.beta[i] = 0; break;
      case VarKind::GammaHat: a.gamma[i] = 0; break;
      case VarKind::DeltaHat: a.delta[i] = 0; break;
      case VarKind::Eta: {
        std::size_t j = static_cast<std::size_t>(star.other);
        a.delta[j] = a.gamma[j] * a.delta[i] / a.gamma[i];
        break;
      }
      case VarKind::Theta: {
        std::size_t j = static_cast<std::size_t>(star.other);
        a.beta[j] = a.delta[i] * a.alpha[j] / a.gamma[i];
        break;
      }
    }
    // All other ledger entries must stay strictly positive.
    bool clean = true;
    auto hat_sign = [](int parity) { return parity % 2 == 0 ? 1 : -1; };
    for (int l = 0; l < diagram.k() && clean; ++l) {
      const ChordStats& s = st[static_cast<std::size_t>(l)];
      auto is_star = [&](VarKind kind, int chord, int other) {
        return star == VarElement{kind, chord, other};
      };
      if (!is_star(VarKind::Alpha, l, -1) && sgn(a.alpha[static_cast<std::size_t>(l)]) <= 0) clean = false;
      if (!is_star(VarKind::Beta, l, -1) && sgn(a.beta[static_cast<std::size_t>(l)]) <= 0) clean = false;
      if (!is_star(VarKind::GammaHat, l, -1) &&
          hat_sign(s.below) * sgn(a.gamma[static_cast<std::size_t>(l)]) <= 0)
        clean = false;
      if (!is_star(VarKind::DeltaHat, l, -1) &&
          hat_sign(s.below) * sgn(a.delta[static_cast<std::size_t>(l)]) <= 0)
        clean = false;
      int eps_parity = s.is_top ? s.behind : s.beyond;
      if (!is_star(VarKind::EpsHat, l, -1) &&
          hat_sign(eps_parity) * sgn(a.epsilon[static_cast<std::size_t>(l)]) <= 0)
        clean = false;
      for (int m2 : s.same_end_descendants) {
        if (is_star(VarKind::Eta, l, m2)) continue;
        Rat det = a.gamma[static_cast<std::size_t>(l)] * a.delta[static_cast<std::size_t>(m2)] -
                  a.gamma[static_cast<std::size_t>(m2)] * a.delta[static_cast<std::size_t>(l)];
        if (hat_sign(s.below - st[static_cast<std::size_t>(m2)].below + 1) * sgn(det) <= 0) clean = false;
      }
      for (int m2 : s.head_to_tail_successors) {
        if (is_star(VarKind::Theta, l, m2)) continue;
        Rat det = a.gamma[static_cast<std::size_t>(l)] * a.beta[static_cast<std::size_t>(m2)] -
                  a.delta[static_cast<std::size_t>(l)] * a.alpha[static_cast<std::size_t>(m2)];
        if (hat_sign(s.below) * sgn(det) <= 0) clean = false;
      }
    }
    if (!clean) continue;
    return matrix_from_assignment(diagram, a);
  }
  throw std::runtime_error("sa_witness: no clean assignment found");
}

}  // namespace bcfw
