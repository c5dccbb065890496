#include "bcfw/domino.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bcfw/prng.hpp"

namespace bcfw {

DominoTemplate domino_template(const ChordDiagram& diagram) {
  DominoTemplate out;
  auto st = diagram.stats();
  const int n = diagram.n();
  for (int l = 0; l < diagram.k(); ++l) {
    const Chord& c = diagram.chord(l);
    DominoTemplate::Row row;
    row.alpha_pos = c.i;
    row.beta_pos = c.i + 1;
    row.gamma_pos = c.j;
    row.delta_pos = c.j + 1;
    if (st[static_cast<std::size_t>(l)].is_top) {
      row.epsilon_pos = n;
    } else {
      const Chord& p = diagram.chord(st[static_cast<std::size_t>(l)].parent);
      row.inherit_alpha_pos = p.i;
      row.inherit_beta_pos = p.i + 1;
    }
    std::vector<int> supp = {row.alpha_pos, row.beta_pos, row.gamma_pos, row.delta_pos};
    if (row.epsilon_pos != -1) supp.push_back(row.epsilon_pos);
    if (row.inherit_alpha_pos != -1) {
      supp.push_back(row.inherit_alpha_pos);
      supp.push_back(row.inherit_beta_pos);
    }
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
    row.support = std::move(supp);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string DominoAssignment::to_json() const {
  nlohmann::json j;
  for (std::size_t l = 0; l < alpha.size(); ++l) {
    nlohmann::json e;
    e["alpha"] = rat_str(alpha[l]);
    e["beta"] = rat_str(beta[l]);
    e["gamma"] = rat_str(gamma[l]);
    e["delta"] = rat_str(delta[l]);
    e["epsilon"] = rat_str(epsilon[l]);
    j[std::to_string(l + 1)] = std::move(e);
  }
  return j.dump();
}

DominoAssignment DominoAssignment::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DominoAssignment a;
  for (std::size_t l = 1; j.contains(std::to_string(l)); ++l) {
    const auto& e = j.at(std::to_string(l));
    a.alpha.push_back(rat_parse(e.at("alpha").get<std::string>()));
    a.beta.push_back(rat_parse(e.at("beta").get<std::string>()));
    a.gamma.push_back(rat_parse(e.at("gamma").get<std::string>()));
    a.delta.push_back(rat_parse(e.at("delta").get<std::string>()));
    a.epsilon.push_back(rat_parse(e.at("epsilon").get<std::string>()));
  }
  return a;
}

namespace {

// Shared machinery of the two generation algorithms. Maintains the matrix
// and applies the fill / head / tail / headright statements.
class Builder {
 public:
  Builder(const ChordDiagram& d, const ConstructionParams& p)
      : d_(d), p_(p), st_(d.stats()), m_(IndexSet{}, IndexSet{d.n()}) {}

  RationalMatrix take() { return std::move(m_); }

  void fill(int marker) {
    if (!m_.cols().contains(marker)) m_ = m_.pre(marker);
  }

  void fill_down(int from, int to) {
    for (int m = from; m >= to; --m) fill(m);
  }

  void head(int l) {
    const Chord& c = d_.chord(l);
    m_ = m_.inc(c.i + 1, l + 1);
    m_ = m_.x_op(c.i + 1, p_.v[static_cast<std::size_t>(l)]);
    m_ = m_.x_op(c.j, p_.w[static_cast<std::size_t>(l)]);
    m_ = m_.y_op(m_.cols().pred(c.i + 1), p_.s[static_cast<std::size_t>(l)]);
  }

  void tail(int l) {
    if (st_[static_cast<std::size_t>(l)].is_sticky_child) return;
    int last = st_[static_cast<std::size_t>(l)].sticky_last;
    for (int h = l; h <= last; ++h)
      m_ = m_.y_op(d_.chord(h).i, p_.u[static_cast<std::size_t>(h)]);
  }

  void headright(int l) {
    const Chord& c = d_.chord(l);
    m_ = m_.inc(c.j, l + 1);
    m_ = m_.x_op(c.j, p_.w[static_cast<std::size_t>(l)]);
    m_ = m_.x_op(c.j + 1, p_.s[static_cast<std::size_t>(l)]);
    m_ = m_.y_op(c.i + 1, p_.v[static_cast<std::size_t>(l)]);
  }

  // sub-construct-matrix over siblings handled last to first.
  void sub(const std::vector<int>& siblings_ascending, int parent_tail, int parent_head) {
    int prev_tail = parent_head;
    for (auto it = siblings_ascending.rbegin(); it != siblings_ascending.rend(); ++it) {
      int l = *it;
      fill_down(prev_tail - 1, d_.chord(l).j);
      head(l);
      sub(st_[static_cast<std::size_t>(l)].children, d_.chord(l).i, d_.chord(l).j);
      tail(l);
      prev_tail = d_.chord(l).i;
    }
    fill_down(prev_tail - 1, parent_tail);
  }

  const ChordDiagram& d_;
  const ConstructionParams& p_;
  std::vector<ChordStats> st_;
  RationalMatrix m_;
};

void require_params(const ChordDiagram& d, const ConstructionParams& p) {
  std::size_t k = static_cast<std::size_t>(d.k());
  if (p.s.size() != k || p.u.size() != k || p.v.size() != k || p.w.size() != k)
    throw std::invalid_argument("construction parameters: wrong count");
}

}  // namespace

RationalMatrix construct_matrix(const ChordDiagram& diagram, const ConstructionParams& params) {
  require_params(diagram, params);
  Builder b(diagram, params);
  if (diagram.k() == 0) {
    RationalMatrix m(IndexSet{}, diagram.markers());
    return m;
  }
  if (!(diagram.markers() == IndexSet::interval(1, diagram.n())))
    throw std::invalid_argument("construct_matrix: standard marker set required");
  b.sub(diagram.top_chords(), 1, diagram.n());
  return b.take();
}

RationalMatrix construct_matrix_rightwards(const ChordDiagram& diagram,
                                           const ConstructionParams& params) {
  require_params(diagram, params);
  if (diagram.k() == 0) return RationalMatrix(IndexSet{}, diagram.markers());
  if (!(diagram.markers() == IndexSet::interval(1, diagram.n())))
    throw std::invalid_argument("construct_matrix_rightwards: standard marker set required");
  Builder b(diagram, params);
  int prev_head = -1;
  for (int l : diagram.top_chords()) {
    const Chord& c = diagram.chord(l);
    for (int m = prev_head + 2; m <= c.i + 1; ++m) b.fill(m);
    b.fill(c.j + 1);
    b.headright(l);
    b.sub(b.st_[static_cast<std::size_t>(l)].children, c.i + 2, c.j);
    b.tail(l);
    prev_head = c.j;
  }
  for (int m = prev_head + 2; m <= diagram.n() - 1; ++m) b.fill(m);
  return b.take();
}

SignRuleReport check_sign_rules(const RationalMatrix& matrix, const ChordDiagram& diagram) {
  SignRuleReport rep;
  const int k = diagram.k();
  const int n = diagram.n();
  auto st = diagram.stats();
  auto tpl = domino_template(diagram);
  auto fail = [&rep](int rule, int chord, int other, const std::string& msg) -> SignRuleReport& {
    rep.ok = false;
    rep.rule = rule;
    rep.chord = chord;
    rep.other_chord = other;
    rep.message = msg;
    return rep;
  };
  if (static_cast<int>(matrix.row_count()) != k || !(matrix.cols() == diagram.markers()))
    return fail(0, -1, -1, "matrix shape does not match the diagram");
  // Support pattern.
  for (int l = 0; l < k; ++l) {
    const auto& supp = tpl.rows[static_cast<std::size_t>(l)].support;
    for (int c : diagram.markers())
      if (!std::binary_search(supp.begin(), supp.end(), c) &&
          sgn(matrix.at_pos(static_cast<std::size_t>(l), matrix.cols().position(c))) != 0)
        return fail(0, l, -1, "entry outside the template support");
  }
  DominoAssignment a;
  a.alpha.resize(static_cast<std::size_t>(k));
  a.beta.resize(static_cast<std::size_t>(k));
  a.gamma.resize(static_cast<std::size_t>(k));
  a.delta.resize(static_cast<std::size_t>(k));
  a.epsilon.resize(static_cast<std::size_t>(k));
  // Row-normalized entries with beta = 1, extracted parent before child.
  std::vector<std::vector<Rat>> e(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) {
    const Chord& c = diagram.chord(l);
    std::vector<Rat> row = matrix.row_values(matrix.rows().at(static_cast<std::size_t>(l)));
    const Rat beta_raw = row[matrix.cols().position(c.i + 1)];
    if (sgn(beta_raw) == 0) return fail(1, l, -1, "beta entry vanishes");
    for (auto& v : row) v /= beta_raw;
    e[static_cast<std::size_t>(l)] = std::move(row);
    auto entry = [&](int col) { return e[static_cast<std::size_t>(l)][matrix.cols().position(col)]; };
    a.beta[static_cast<std::size_t>(l)] = 1;
    a.gamma[static_cast<std::size_t>(l)] = entry(c.j);
    a.delta[static_cast<std::size_t>(l)] = entry(c.j + 1);
    const ChordStats& s = st[static_cast<std::size_t>(l)];
    if (s.is_top) {
      a.alpha[static_cast<std::size_t>(l)] = entry(c.i);
      a.epsilon[static_cast<std::size_t>(l)] = entry(n);
    } else {
      const Chord& p = diagram.chord(s.parent);
      const Rat pa = a.alpha[static_cast<std::size_t>(s.parent)];
      const Rat pb = a.beta[static_cast<std::size_t>(s.parent)];
      if (s.is_sticky_child) {
        Rat eps = entry(p.i) / pa;
        a.epsilon[static_cast<std::size_t>(l)] = eps;
        a.alpha[static_cast<std::size_t>(l)] = entry(c.i) - eps * pb;
      } else {
        Rat eps = entry(p.i + 1) / pb;
        a.epsilon[static_cast<std::size_t>(l)] = eps;
        if (entry(p.i) != eps * pa)
          return fail(0, l, s.parent, "inherited domino not proportional to the parent tail");
        a.alpha[static_cast<std::size_t>(l)] = entry(c.i);
      }
    }
  }
  // Sign rules 1-4.
  auto hat_sign = [](int parity) { return parity % 2 == 0 ? 1 : -1; };
  for (int l = 0; l < k; ++l) {
    const ChordStats& s = st[static_cast<std::size_t>(l)];
    if (sgn(a.alpha[static_cast<std::size_t>(l)]) <= 0)
      return fail(1, l, -1, "alpha must be positive");
    if (hat_sign(s.below) * sgn(a.gamma[static_cast<std::size_t>(l)]) <= 0)
      return fail(2, l, -1, "gamma has the wrong sign");
    if (hat_sign(s.below) * sgn(a.delta[static_cast<std::size_t>(l)]) <= 0)
      return fail(2, l, -1, "delta has the wrong sign");
    int eps_parity = s.is_top ? s.behind : s.beyond;
    if (hat_sign(eps_parity) * sgn(a.epsilon[static_cast<std::size_t>(l)]) <= 0)
      return fail(s.is_top ? 3 : 4, l, -1, "epsilon has the wrong sign");
  }
  // Rules 5 and 6 in 2x2-minor form: eta over same-end ancestor/descendant
  // pairs, theta over head-to-tail pairs.
  for (int l = 0; l < k; ++l) {
    const ChordStats& s = st[static_cast<std::size_t>(l)];
    for (int m : s.same_end_descendants) {
      Rat det = a.gamma[static_cast<std::size_t>(l)] * a.delta[static_cast<std::size_t>(m)] -
                a.gamma[static_cast<std::size_t>(m)] * a.delta[static_cast<std::size_t>(l)];
      int sign = hat_sign(s.below - st[static_cast<std::size_t>(m)].below + 1);
      if (sign * sgn(det) <= 0) return fail(5, l, m, "same-end ratio rule violated");
    }
    for (int m : s.head_to_tail_successors) {
      Rat det = a.gamma[static_cast<std::size_t>(l)] * a.beta[static_cast<std::size_t>(m)] -
                a.delta[static_cast<std::size_t>(l)] * a.alpha[static_cast<std::size_t>(m)];
      if (hat_sign(s.below) * sgn(det) <= 0) return fail(6, l, m, "head-to-tail ratio rule violated");
    }
  }
  rep.ok = true;
  rep.rule = 0;
  rep.chord = -1;
  rep.message = "ok";
  rep.assignment = std::move(a);
  return rep;
}

RationalMatrix matrix_from_assignment(const ChordDiagram& diagram, const DominoAssignment& a) {
  const int k = diagram.k();
  auto st = diagram.stats();
  RationalMatrix m(IndexSet::interval(1, k), diagram.markers());
  for (int l = 0; l < k; ++l) {
    const Chord& c = diagram.chord(l);
    auto add = [&](int col, const Rat& v) { m.set(l + 1, col, m.at(l + 1, col) + v); };
    add(c.i, a.alpha[static_cast<std::size_t>(l)]);
    add(c.i + 1, a.beta[static_cast<std::size_t>(l)]);
    add(c.j, a.gamma[static_cast<std::size_t>(l)]);
    add(c.j + 1, a.delta[static_cast<std::size_t>(l)]);
    const ChordStats& s = st[static_cast<std::size_t>(l)];
    if (s.is_top) {
      add(diagram.n(), a.epsilon[static_cast<std::size_t>(l)]);
    } else {
      const Chord& p = diagram.chord(s.parent);
      add(p.i, a.epsilon[static_cast<std::size_t>(l)] * a.alpha[static_cast<std::size_t>(s.parent)]);
      add(p.i + 1, a.epsilon[static_cast<std::size_t>(l)] * a.beta[static_cast<std::size_t>(s.parent)]);
    }
  }
  return m;
}

ConstructionParams sample_params(const ChordDiagram& diagram, std::uint64_t seed) {
  SplitMix64 gen(seed);
  std::size_t k = static_cast<std::size_t>(diagram.k());
  ConstructionParams p;
  p.s = gen.rationals(k);
  p.u = gen.rationals(k);
  p.v = gen.rationals(k);
  p.w = gen.rationals(k);
  return p;
}

RationalMatrix sample_cell(const ChordDiagram& diagram, std::uint64_t seed) {
  return construct_matrix(diagram, sample_params(diagram, seed));
}

std::optional<DominoAssignment> random_assignment(const ChordDiagram& diagram, std::uint64_t seed,
                                                  int max_tries) {
  const int k = diagram.k();
  auto st = diagram.stats();
  SplitMix64 gen(seed);
  auto hat_sign = [](int parity) { return parity % 2 == 0 ? 1 : -1; };
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    DominoAssignment a;
    for (int l = 0; l < k; ++l) {
      const ChordStats& s = st[static_cast<std::size_t>(l)];
      a.alpha.push_back(gen.rational());
      a.beta.push_back(gen.rational());
      a.gamma.push_back(Rat(hat_sign(s.below)) * gen.rational());
      a.delta.push_back(Rat(hat_sign(s.below)) * gen.rational());
      int eps_parity = s.is_top ? s.behind : s.beyond;
      a.epsilon.push_back(Rat(hat_sign(eps_parity)) * gen.rational());
    }
    bool ok = true;
    for (int l = 0; l < k && ok; ++l) {
      const ChordStats& s = st[static_cast<std::size_t>(l)];
      for (int m : s.same_end_descendants) {
        Rat det = a.gamma[static_cast<std::size_t>(l)] * a.delta[static_cast<std::size_t>(m)] -
                  a.gamma[static_cast<std::size_t>(m)] * a.delta[static_cast<std::size_t>(l)];
        if (hat_sign(s.below - st[static_cast<std::size_t>(m)].below + 1) * sgn(det) <= 0) ok = false;
      }
      for (int m : s.head_to_tail_successors) {
        Rat det = a.gamma[static_cast<std::size_t>(l)] * a.beta[static_cast<std::size_t>(m)] -
                  a.delta[static_cast<std::size_t>(l)] * a.alpha[static_cast<std::size_t>(m)];
        if (hat_sign(s.below) * sgn(det) <= 0) ok = false;
      }
    }
    if (ok) return a;
  }
  return std::nullopt;
}

namespace {

struct Params4 {
  Rat s, u, v, w;
};

using ParamMap = std::map<std::pair<int, int>, Params4>;

void recover_rec(const ChordDiagram& d, const RationalMatrix& v, ParamMap& out,
                 std::vector<std::pair<int, Rat>>* splits);

// The single-top-chord step: strips unused side markers, peels off the top
// row and undoes the rotate / x / rescale conjugation on the rest.
void recover_single_top(const ChordDiagram& d, const RationalMatrix& v, ParamMap& out,
                        std::vector<std::pair<int, Rat>>* splits) {
  const int k = d.k();
  const Chord c1 = d.chord(0);
  const int n = d.markers().max();
  const int a = c1.i;
  const int b = c1.j;
  IndexSet n0 = d.markers().slice(a, b + 1).with(n);
  for (int col : d.markers())
    if (!n0.contains(col))
      for (std::size_t r = 0; r < v.row_count(); ++r)
        if (sgn(v.at_pos(r, v.cols().position(col))) != 0)
          throw std::domain_error("recover: nonzero entry in a dead column");
  RationalMatrix v0 = v.restrict_cols(n0);

  RationalMatrix top = v0.rowspan_intersect_support(IndexSet{a, a + 1, b, b + 1, n});
  if (top.row_count() != 1) throw std::domain_error("recover: top row not one-dimensional");
  auto entry = [&](int col) { return top.at_pos(0, top.cols().position(col)); };
  Rat beta = entry(a + 1);
  if (sgn(beta) == 0) throw std::domain_error("recover: top row beta entry vanishes");
  std::vector<int> five = {a, a + 1, b, b + 1, n};
  std::vector<Rat> r;
  for (int col : five) r.push_back(entry(col) / beta);
  int below_sign = (k - 1) % 2 == 0 ? 1 : -1;  // below(c1) = behind(c1) = k-1 here
  Rat u1 = r[0];
  Rat v1 = Rat(below_sign) * r[2];
  Rat s1 = Rat(below_sign) * r[4];
  if (sgn(u1) <= 0 || sgn(v1) <= 0 || sgn(s1) <= 0 || Rat(below_sign) * r[3] <= 0)
    throw std::domain_error("recover: top row violates the sign rules");

  Rat w_same_end = 0;
  if (k > 1) {
    RationalMatrix rest = v0.rowspan_intersect_support(n0.without(n));
    if (rest.row_count() != static_cast<std::size_t>(k - 1))
      throw std::domain_error("recover: lower block has the wrong dimension");
    RationalMatrix w = rest.restrict_cols(n0.without(n));
    w = w.scale_col(a, Rat(1) / u1);
    w = w.add_col_multiple(a + 1, a, Rat(-1));
    w = w.move_col(a, n, k % 2 == 0 ? Rat(1) : Rat(-1));
    std::vector<Chord> sub_chords(d.chords().begin() + 1, d.chords().end());
    ChordDiagram db(n0.without(a), std::move(sub_chords));
    recover_rec(db, w, out, splits);
    for (const Chord& ch : db.chords())
      if (ch.j == b) w_same_end += out.at({ch.i, ch.j}).w;
  }
  Rat w1 = r[3] / r[2] - w_same_end;
  if (sgn(w1) <= 0) throw std::domain_error("recover: nonpositive w parameter");
  out[{c1.i, c1.j}] = Params4{s1, u1, v1, w1};
}

void recover_rec(const ChordDiagram& d, const RationalMatrix& v, ParamMap& out,
                 std::vector<std::pair<int, Rat>>* splits) {
  const int k = d.k();
  if (static_cast<int>(v.row_count()) != k)
    throw std::domain_error("recover: dimension mismatch");
  if (k == 0) return;
  auto tops = d.top_chords();
  if (tops.size() == 1) {
    recover_single_top(d, v, out, splits);
    return;
  }
  // Split at the head of the first top chord.
  const Chord c1 = d.chord(0);
  const int i = c1.j;
  const int n = d.markers().max();
  IndexSet nb = d.markers().slice(1, i + 1).with(n);
  IndexSet nc = d.markers().slice(i, n);
  ChordDiagram db = d.induced(nb);
  ChordDiagram dc = d.induced(nc);
  if (db.k() + dc.k() != k) throw std::logic_error("recover: split lost chords");
  RationalMatrix vb = v.rowspan_intersect_support(nb);
  RationalMatrix vc = v.rowspan_intersect_support(nc);
  if (static_cast<int>(vb.row_count()) != db.k() || static_cast<int>(vc.row_count()) != dc.k())
    throw std::domain_error("recover: block dimensions do not match the diagram");
  RationalMatrix left = vb.restrict_cols(nb);
  // The epsilon column of the left block was written with k rows present,
  // the standalone construction of db sees only db.k() of them; the
  // overflow signs differ by (-1)^(k - k').
  if ((k - db.k()) % 2 != 0) left = left.scale_col(n, Rat(-1));
  recover_rec(db, left, out, splits);
  Rat w = 0;
  for (const Chord& ch : db.chords())
    if (ch.j == i) w += out.at({ch.i, ch.j}).w;
  if (splits) splits->push_back({i, w});
  RationalMatrix right = vc.restrict_cols(nc).add_col_multiple(i + 1, i, -w);
  recover_rec(dc, right, out, splits);
}

}  // namespace

RecoverTrace recover_params_traced(const ChordDiagram& diagram, const RationalMatrix& point) {
  if (!(point.cols() == diagram.markers()))
    throw std::invalid_argument("recover_params: column set mismatch");
  if (point.rank() != static_cast<std::size_t>(diagram.k()))
    throw std::domain_error("recover: point has the wrong rank");
  RecoverTrace trace;
  ParamMap map;
  recover_rec(diagram, point, map, &trace.splits);
  for (const Chord& c : diagram.chords()) {
    const Params4& p = map.at({c.i, c.j});
    if (sgn(p.s) <= 0 || sgn(p.u) <= 0 || sgn(p.v) <= 0 || sgn(p.w) <= 0)
      throw std::domain_error("recover: nonpositive parameter");
    trace.params.s.push_back(p.s);
    trace.params.u.push_back(p.u);
    trace.params.v.push_back(p.v);
    trace.params.w.push_back(p.w);
  }
  return trace;
}

ConstructionParams recover_params(const ChordDiagram& diagram, const RationalMatrix& point) {
  return recover_params_traced(diagram, point).params;
}

}  // namespace bcfw
