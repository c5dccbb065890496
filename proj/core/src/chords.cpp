#include "bcfw/chords.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bcfw/matrix.hpp"

namespace bcfw {

ChordDiagram::ChordDiagram(IndexSet markers, std::vector<Chord> chords)
    : markers_(std::move(markers)), chords_(std::move(chords)) {
  std::sort(chords_.begin(), chords_.end());
  validate();
}

ChordDiagram ChordDiagram::standard(int n, std::vector<Chord> chords) {
  return ChordDiagram(IndexSet::interval(1, n), std::move(chords));
}

void ChordDiagram::validate() const {
  if (markers_.empty()) throw std::invalid_argument("diagram: empty marker set");
  int n = markers_.max();
  for (const Chord& c : chords_) {
    if (c.j < c.i + 2) throw std::invalid_argument("diagram: chord head too close to tail");
    for (int m : {c.i, c.i + 1, c.j, c.j + 1})
      if (!markers_.contains(m)) throw std::invalid_argument("diagram: chord marker not in set");
    if (c.j + 1 >= n) throw std::invalid_argument("diagram: chord ends after the last allowed marker");
  }
  for (std::size_t a = 0; a + 1 < chords_.size(); ++a) {
    if (chords_[a].i == chords_[a + 1].i)
      throw std::invalid_argument("diagram: two chords start on the same segment");
    for (std::size_t b = a + 1; b < chords_.size(); ++b)
      if (chords_[a].i < chords_[b].i && chords_[b].i < chords_[a].j && chords_[a].j < chords_[b].j)
        throw std::invalid_argument("diagram: crossing chords");
  }
}

std::vector<ChordStats> ChordDiagram::stats() const {
  const int k = this->k();
  std::vector<ChordStats> st(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) {
    const Chord& c = chords_[l];
    ChordStats& s = st[l];
    s.behind = k - 1 - l;
    s.is_short = (c.j == c.i + 2);
    int best_parent = -1;
    for (int m = 0; m < k; ++m) {
      if (m == l) continue;
      const Chord& d = chords_[m];
      bool l_descends_from_m = d.i < c.i && c.j <= d.j;
      bool m_descends_from_l = c.i < d.i && d.j <= c.j;
      if (m_descends_from_l) {
        ++s.below;
        if (d.j == c.j) s.same_end_descendants.push_back(m);
      }
      if (l_descends_from_m && (best_parent == -1 || chords_[best_parent].i < d.i))
        best_parent = m;
      if (d.j == c.i) {
        if (s.outermost_ending_at_tail == -1 || m < s.outermost_ending_at_tail)
          s.outermost_ending_at_tail = m;
      }
      if (d.i == c.j) s.head_to_tail_successors.push_back(m);
    }
    s.parent = best_parent;
    s.is_top = (best_parent == -1);
    if (!s.same_end_descendants.empty()) s.same_end_child = s.same_end_descendants.front();
  }
  for (int l = 0; l < k; ++l) {
    if (st[l].parent >= 0) {
      st[st[l].parent].children.push_back(l);
      st[l].beyond = l - st[l].parent - 1;
    }
    int last = l;
    while (true) {
      int next = chord_starting_at(chords_[last].i + 1);
      if (next == -1) break;
      last = next;
    }
    st[l].sticky_last = last;
    int first = l;
    while (true) {
      int prev = chord_starting_at(chords_[first].i - 1);
      if (prev == -1) break;
      first = prev;
    }
    st[l].sticky_first = first;
    st[l].is_sticky_child = (chord_starting_at(chords_[l].i - 1) != -1);
    st[l].is_sticky_parent = (chord_starting_at(chords_[l].i + 1) != -1);
  }
  return st;
}

std::vector<int> ChordDiagram::top_chords() const {
  std::vector<int> out;
  auto st = stats();
  for (int l = 0; l < k(); ++l)
    if (st[static_cast<std::size_t>(l)].is_top) out.push_back(l);
  return out;
}

int ChordDiagram::chord_starting_at(int i) const {
  for (int l = 0; l < k(); ++l)
    if (chords_[static_cast<std::size_t>(l)].i == i) return l;
  return -1;
}

std::vector<int> ChordDiagram::used_markers() const {
  std::vector<int> used;
  for (const Chord& c : chords_)
    for (int m : {c.i, c.i + 1, c.j, c.j + 1}) used.push_back(m);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

ChordDiagram ChordDiagram::induced(const IndexSet& sub_markers) const {
  std::vector<Chord> sub;
  for (const Chord& c : chords_) {
    bool inside = sub_markers.contains(c.i) && sub_markers.contains(c.i + 1) &&
                  sub_markers.contains(c.j) && sub_markers.contains(c.j + 1);
    if (inside) sub.push_back(c);
  }
  return ChordDiagram(sub_markers, std::move(sub));
}

ChordDiagram ChordDiagram::strip_marker(int h) const {
  for (int m : used_markers())
    if (m == h) throw std::invalid_argument("strip_marker: marker is used");
  if (h == markers_.max()) throw std::invalid_argument("strip_marker: cannot strip the last marker");
  return ChordDiagram(markers_.without(h), chords_);
}

DecoratedPermutation ChordDiagram::to_permutation() const {
  const int n = this->n();
  auto st = stats();
  std::vector<std::vector<int>> cycles;
  for (int l = 0; l < k(); ++l) {
    const Chord& c = chords_[static_cast<std::size_t>(l)];
    int t = c.i;
    int u = chords_[static_cast<std::size_t>(st[static_cast<std::size_t>(l)].sticky_last)].i + 1;
    int v, w;
    int m = chord_starting_at(c.j);
    if (m == -1) {
      v = c.j;
      int m2 = chord_starting_at(c.j + 1);
      if (m2 == -1)
        w = c.j + 1;
      else
        w = chords_[static_cast<std::size_t>(st[static_cast<std::size_t>(m2)].sticky_last)].i + 1;
    } else {
      v = chords_[static_cast<std::size_t>(st[static_cast<std::size_t>(m)].sticky_last)].i + 1;
      int h = chord_starting_at(chords_[static_cast<std::size_t>(m)].j);
      if (h == -1)
        w = chords_[static_cast<std::size_t>(m)].j;
      else
        w = chords_[static_cast<std::size_t>(st[static_cast<std::size_t>(h)].sticky_last)].i + 1;
    }
    cycles.push_back({t, u, v, w, n});
  }
  return DecoratedPermutation::from_cycles(markers_, cycles);
}

std::vector<SigmaFactor> sigma_word(const ChordDiagram& diagram) {
  const int n = diagram.n();
  auto st = diagram.stats();
  // Endpoint events in order of occurrence; at a shared segment heads come
  // first, deeper chords before their same-end ancestors.
  struct Event {
    int pos;
    bool is_tail;
    int chord;
  };
  std::vector<Event> events;
  for (int l = 0; l < diagram.k(); ++l) {
    events.push_back({diagram.chord(l).i, true, l});
    events.push_back({diagram.chord(l).j, false, l});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    if (a.is_tail != b.is_tail) return !a.is_tail;  // heads first
    return a.chord > b.chord;                       // child head before parent head
  });
  std::vector<SigmaFactor> word;
  for (const Event& e : events) {
    const Chord& c = diagram.chord(e.chord);
    const ChordStats& s = st[static_cast<std::size_t>(e.chord)];
    if (e.is_tail) {
      word.push_back({{c.i, diagram.chord(s.sticky_last).i + 1}, e.chord, SigmaFactor::kTail2});
    } else {
      int q = s.is_top ? n : diagram.chord(s.parent).i + 1;
      word.push_back({{c.i + 1, q}, e.chord, SigmaFactor::kHead2});
    }
  }
  // 3-cycles, one per head, first head rightmost.
  std::vector<int> head_order;
  for (const Event& e : events)
    if (!e.is_tail) head_order.push_back(e.chord);
  for (auto it = head_order.rbegin(); it != head_order.rend(); ++it) {
    const Chord& c = diagram.chord(*it);
    word.push_back({{c.i + 1, c.j, c.j + 1}, *it, SigmaFactor::kHead3});
  }
  return word;
}

DecoratedPermutation compose_sigma_word(const IndexSet& domain,
                                        const std::vector<SigmaFactor>& word) {
  std::vector<std::vector<int>> cycles;
  for (const SigmaFactor& f : word) cycles.push_back(f.cycle);
  return DecoratedPermutation::from_cycles(domain, cycles);
}

DecoratedPermutation ChordDiagram::algorithmic_permutation() const {
  return compose_sigma_word(markers_, sigma_word(*this));
}

std::string ChordDiagram::to_text() const {
  std::ostringstream os;
  os << "n=" << n() << ";";
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    os << (i ? ", " : " ") << chords_[i].i << "-" << chords_[i].j;
  }
  return os.str();
}

std::string ChordDiagram::to_json() const {
  nlohmann::json j;
  if (markers_ == IndexSet::interval(1, n()))
    j["n"] = n();
  else
    j["markers"] = markers_.elements();
  nlohmann::json ch = nlohmann::json::array();
  for (const Chord& c : chords_) ch.push_back({c.i, c.j});
  j["chords"] = std::move(ch);
  return j.dump();
}

ChordDiagram ChordDiagram::from_text(const std::string& text) {
  std::string s = text;
  auto eat = [&s](char what) {
    auto p = s.find(what);
    if (p == std::string::npos) throw std::invalid_argument("bad diagram text: " + s);
    s = s.substr(p + 1);
  };
  eat('=');
  int n = std::stoi(s);
  eat(';');
  std::vector<Chord> chords;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      throw std::invalid_argument("bad chord token: " + tok);
    }
    chords.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
  }
  return standard(n, std::move(chords));
}

ChordDiagram ChordDiagram::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Chord> chords;
  for (const auto& c : j.at("chords")) chords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  if (j.contains("markers"))
    return ChordDiagram(IndexSet(j.at("markers").get<std::vector<int>>()), std::move(chords));
  return standard(j.at("n").get<int>(), std::move(chords));
}

namespace {

void enumerate_heads(int n, const std::vector<int>& tails, std::size_t l,
                     std::vector<Chord>& cur, std::vector<ChordDiagram>& out) {
  if (l == tails.size()) {
    out.push_back(ChordDiagram::standard(n, cur));
    return;
  }
  int i = tails[l];
  for (int j = i + 2; j <= n - 2; ++j) {
    bool ok = true;
    for (const Chord& prev : cur) {
      // prev.i < i always; forbid prev.i < i < prev.j < j.
      if (i < prev.j && j > prev.j) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back({i, j});
    enumerate_heads(n, tails, l + 1, cur, out);
    cur.pop_back();
  }
}

void enumerate_tails(int n, int k, int from, std::vector<int>& tails,
                     std::vector<ChordDiagram>& out) {
  if (static_cast<int>(tails.size()) == k) {
    std::vector<Chord> cur;
    enumerate_heads(n, tails, 0, cur, out);
    return;
  }
  for (int i = from; i <= n - 4; ++i) {
    tails.push_back(i);
    enumerate_tails(n, k, i + 1, tails, out);
    tails.pop_back();
  }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int n, int k) {
  if (n < 4) throw std::invalid_argument("enumerate_diagrams: n < 4");
  if (k < 0 || k > n - 4) return {};
  std::vector<ChordDiagram> out;
  std::vector<int> tails;
  enumerate_tails(n, k, 1, tails, out);
  std::sort(out.begin(), out.end());
  return out;
}

long diagram_count_formula(int n, int k) {
  auto binom = [](long a, long b) -> long {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(n - 3, k + 1) * binom(n - 3, k) / (n - 3);
}

std::vector<LatticeWalkPair> enumerate_walks(int n, int k) {
  std::vector<LatticeWalkPair> out;
  IndexSet steps = IndexSet::interval(1, n - 4);
  auto bs = subsets_of_size(steps, static_cast<std::size_t>(k));
  for (const IndexSet& b : bs)
    for (const IndexSet& a : bs) {
      bool noncrossing = true;
      for (std::size_t r = 0; r < b.size(); ++r)
        if (b.at(r) > a.at(r)) noncrossing = false;
      if (noncrossing) out.push_back({n, k, a.elements(), b.elements()});
    }
  return out;
}

ChordDiagram walks_to_diagram(const LatticeWalkPair& walks) {
  const int n = walks.n;
  const int k = walks.k;
  if (static_cast<int>(walks.a_vertical.size()) != k ||
      static_cast<int>(walks.b_vertical.size()) != k)
    throw std::invalid_argument("walks: wrong number of vertical steps");
  std::vector<int> p = walks.a_vertical;  // W_A
  std::vector<int> q = walks.b_vertical;  // W_B
  std::sort(p.begin(), p.end());
  std::sort(q.begin(), q.end());
  for (int l = 0; l < k; ++l)
    if (q[static_cast<std::size_t>(l)] > p[static_cast<std::size_t>(l)])
      throw std::invalid_argument("walks: crossing pair");
  if (k == 0) return ChordDiagram::standard(n, {});
  if (q.back() > n - 4 || q.front() < 1) throw std::invalid_argument("walks: step out of range");
  // Horizontal steps of W_A at row l (1-based): gaps between vertical steps.
  std::vector<int> a(static_cast<std::size_t>(k));
  for (int l = 0; l < k - 1; ++l)
    a[static_cast<std::size_t>(l)] = p[static_cast<std::size_t>(l + 1)] - p[static_cast<std::size_t>(l)] - 1;
  a[static_cast<std::size_t>(k - 1)] = (n - 4) - p.back();
  // Select heads going from the last chord backwards, skipping a_l options.
  std::vector<int> heads(static_cast<std::size_t>(k));
  std::vector<int> options;
  for (int x = q.back() + 2; x <= n - 2; ++x) options.push_back(x);
  for (int l = k - 1; l >= 0; --l) {
    int skip = a[static_cast<std::size_t>(l)];
    if (skip >= static_cast<int>(options.size()))
      throw std::invalid_argument("walks: inconsistent walk pair");
    heads[static_cast<std::size_t>(l)] = options[static_cast<std::size_t>(skip)];
    options.erase(options.begin(), options.begin() + skip);
    if (l > 0) {
      std::vector<int> next;
      for (int x = q[static_cast<std::size_t>(l - 1)] + 2; x <= q[static_cast<std::size_t>(l)]; ++x)
        next.push_back(x);
      next.insert(next.end(), options.begin(), options.end());
      options = std::move(next);
    }
  }
  std::vector<Chord> chords;
  for (int l = 0; l < k; ++l) chords.push_back({q[static_cast<std::size_t>(l)], heads[static_cast<std::size_t>(l)]});
  return ChordDiagram::standard(n, std::move(chords));
}

LatticeWalkPair diagram_to_walks(const ChordDiagram& diagram) {
  const int n = diagram.n();
  const int k = diagram.k();
  if (!(diagram.markers() == IndexSet::interval(1, n)))
    throw std::invalid_argument("diagram_to_walks: standard marker set required");
  LatticeWalkPair out{n, k, {}, {}};
  if (k == 0) return out;
  for (const Chord& c : diagram.chords()) out.b_vertical.push_back(c.i);
  // Replays the head-selection options to read off the skip counts a_l.
  std::vector<int> a(static_cast<std::size_t>(k));
  std::vector<int> options;
  const auto& chords = diagram.chords();
  for (int x = chords.back().i + 2; x <= n - 2; ++x) options.push_back(x);
  for (int l = k - 1; l >= 0; --l) {
    int j = chords[static_cast<std::size_t>(l)].j;
    auto it = std::find(options.begin(), options.end(), j);
    if (it == options.end()) throw std::logic_error("diagram_to_walks: head not among options");
    int skip = static_cast<int>(it - options.begin());
    a[static_cast<std::size_t>(l)] = skip;
    options.erase(options.begin(), options.begin() + skip);
    if (l > 0) {
      std::vector<int> next;
      for (int x = chords[static_cast<std::size_t>(l - 1)].i + 2;
           x <= chords[static_cast<std::size_t>(l)].i; ++x)
        next.push_back(x);
      next.insert(next.end(), options.begin(), options.end());
      options = std::move(next);
    }
  }
  std::vector<int> p(static_cast<std::size_t>(k));
  p[static_cast<std::size_t>(k - 1)] = (n - 4) - a[static_cast<std::size_t>(k - 1)];
  for (int l = k - 2; l >= 0; --l)
    p[static_cast<std::size_t>(l)] = p[static_cast<std::size_t>(l + 1)] - a[static_cast<std::size_t>(l)] - 1;
  out.a_vertical = std::move(p);
  return out;
}

std::string OplusDiagram::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < filling.size(); ++r) {
    os << row_labels[r] << ": " << filling[r] << "\n";
  }
  return os.str();
}

OplusDiagram diagram_to_oplus(const ChordDiagram& diagram) {
  const int n = diagram.n();
  const int k = diagram.k();
  if (!(diagram.markers() == IndexSet::interval(1, n)))
    throw std::invalid_argument("diagram_to_oplus: standard marker set required");
  OplusDiagram out;
  out.n = n;
  std::vector<bool> is_tail(static_cast<std::size_t>(n + 1), false);
  for (const Chord& c : diagram.chords()) is_tail[static_cast<std::size_t>(c.i)] = true;
  for (const Chord& c : diagram.chords()) out.row_labels.push_back(c.i);
  for (int m = n; m >= 1; --m)
    if (!is_tail[static_cast<std::size_t>(m)]) out.col_labels.push_back(m);
  auto row_width = [&](int r) {
    int tail = out.row_labels[static_cast<std::size_t>(r)];
    int w = 0;
    for (int label : out.col_labels)
      if (label > tail) ++w;
    return w;
  };
  out.filling.assign(static_cast<std::size_t>(k), "");
  for (int r = 0; r < k; ++r)
    out.filling[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(row_width(r)), ' ');
  // Fill bottom-up; in each row, the suffix of columns labeled below the
  // chord's head gets o...o+, the columns above suffix o's get o, and the
  // remaining empty boxes get + o..o + +.
  for (int r = k - 1; r >= 0; --r) {
    const Chord& c = diagram.chord(r);
    std::string& row = out.filling[static_cast<std::size_t>(r)];
    int width = static_cast<int>(row.size());
    int suffix_start = width;  // first column position with label < c.j
    while (suffix_start > 0 && out.col_labels[static_cast<std::size_t>(suffix_start - 1)] < c.j)
      --suffix_start;
    for (int p = suffix_start; p < width; ++p) {
      char v = (p == width - 1) ? '+' : 'o';
      row[static_cast<std::size_t>(p)] = v;
      if (v == 'o')
        for (int r2 = 0; r2 < r; ++r2) out.filling[static_cast<std::size_t>(r2)][static_cast<std::size_t>(p)] = 'o';
    }
    std::vector<int> empty;
    for (int p = 0; p < suffix_start; ++p)
      if (row[static_cast<std::size_t>(p)] == ' ') empty.push_back(p);
    for (std::size_t e = 0; e < empty.size(); ++e) {
      bool plus = (e == 0) || (e + 2 >= empty.size());
      row[static_cast<std::size_t>(empty[e])] = plus ? '+' : 'o';
    }
  }
  return out;
}

bool oplus_is_valid(const OplusDiagram& oplus) {
  const int k = static_cast<int>(oplus.filling.size());
  auto plus_positions = [&](int r) {
    std::vector<int> plus;
    const std::string& row = oplus.filling[static_cast<std::size_t>(r)];
    for (int p = 0; p < static_cast<int>(row.size()); ++p)
      if (row[static_cast<std::size_t>(p)] == '+') plus.push_back(p);
    return plus;
  };
  for (int r = 0; r < k; ++r) {
    const std::string& row = oplus.filling[static_cast<std::size_t>(r)];
    std::vector<int> plus = plus_positions(r);
    if (plus.size() != 4) return false;  // (a)
    if (plus[0] != 0 || plus[3] != static_cast<int>(row.size()) - 1) return false;  // (b)
    // (c): the column above an o between the 3rd and 4th + carries no +.
    for (int p = plus[2] + 1; p < plus[3]; ++p)
      for (int r2 = 0; r2 < r; ++r2)
        if (oplus.filling[static_cast<std::size_t>(r2)][static_cast<std::size_t>(p)] == '+')
          return false;
    // (d): an o between the 2nd and 3rd + sits in the same column above an
    // o lying between the 3rd and 4th + of some lower row.
    for (int p = plus[1] + 1; p < plus[2]; ++p) {
      bool found = false;
      for (int r2 = r + 1; r2 < k && !found; ++r2) {
        const std::string& below = oplus.filling[static_cast<std::size_t>(r2)];
        if (p >= static_cast<int>(below.size())) break;
        if (below[static_cast<std::size_t>(p)] != 'o') break;  // a + ends the column
        std::vector<int> bplus = plus_positions(r2);
        if (bplus[2] < p && p < bplus[3]) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

DecoratedPermutation oplus_to_permutation(const OplusDiagram& oplus) {
  const int k = static_cast<int>(oplus.filling.size());
  const int n = oplus.n;
  auto width = [&](int r) { return static_cast<int>(oplus.filling[static_cast<std::size_t>(r)].size()); };
  auto tile = [&](int r, int c) { return oplus.filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  DecoratedPermutation perm = DecoratedPermutation::identity(IndexSet::interval(1, n));
  // Pipes flow up and to the left; 'o' is a crossing, '+' turns
  // right-entry up and bottom-entry left.
  auto flow = [&](int r, int c, bool moving_left) -> int {
    while (true) {
      if (moving_left) {
        if (tile(r, c) == '+') {
          // exit top
          if (r == 0) return oplus.col_labels[static_cast<std::size_t>(c)];
          --r;
          moving_left = false;
        } else {
          if (c == 0) return oplus.row_labels[static_cast<std::size_t>(r)];
          --c;
        }
      } else {
        // moving up: entered from the bottom edge
        if (tile(r, c) == '+') {
          if (c == 0) return oplus.row_labels[static_cast<std::size_t>(r)];
          --c;
          moving_left = true;
        } else {
          if (r == 0) return oplus.col_labels[static_cast<std::size_t>(c)];
          --r;
        }
      }
    }
  };
  for (int r = 0; r < k; ++r) {
    int start = oplus.row_labels[static_cast<std::size_t>(r)];
    perm.set_image(start, flow(r, width(r) - 1, true));
  }
  for (int c = 0; c < static_cast<int>(oplus.col_labels.size()); ++c) {
    int rmax = -1;
    for (int r = 0; r < k; ++r)
      if (width(r) > c) rmax = r;
    int start = oplus.col_labels[static_cast<std::size_t>(c)];
    if (rmax == -1) continue;  // no boxes in this column
    perm.set_image(start, flow(rmax, c, false));
  }
  return perm;
}

}  // namespace bcfw
