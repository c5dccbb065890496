#include "bcfw/ampl.hpp"

#include <sstream>
#include <stdexcept>

#include "bcfw/prng.hpp"

namespace bcfw {

PositiveZ::PositiveZ(int n, int k, RationalMatrix mat) : n_(n), k_(k), mat_(std::move(mat)) {
  if (!(mat_.rows() == IndexSet::interval(1, n)) || !(mat_.cols() == IndexSet::interval(1, k + 4)))
    throw std::invalid_argument("PositiveZ: expected rows [n], cols [k+4]");
  for (const IndexSet& rows : subsets_of_size(mat_.rows(), static_cast<std::size_t>(k + 4))) {
    RationalMatrix minor = mat_.restrict_rows(rows);
    if (sgn(minor.det()) <= 0) throw std::invalid_argument("PositiveZ: nonpositive maximal minor");
  }
}

PositiveZ make_positive_Z(int n, int k, const std::vector<Rat>& nodes) {
  if (static_cast<int>(nodes.size()) != n) throw std::invalid_argument("make_positive_Z: need n nodes");
  for (int i = 0; i + 1 < n; ++i)
    if (nodes[static_cast<std::size_t>(i)] >= nodes[static_cast<std::size_t>(i + 1)])
      throw std::invalid_argument("make_positive_Z: nodes must be strictly increasing");
  if (sgn(nodes[0]) <= 0) throw std::invalid_argument("make_positive_Z: nodes must be positive");
  RationalMatrix m(IndexSet::interval(1, n), IndexSet::interval(1, k + 4));
  for (int r = 1; r <= n; ++r) {
    Rat pw = 1;
    for (int c = 1; c <= k + 4; ++c) {
      m.set(r, c, pw);
      pw *= nodes[static_cast<std::size_t>(r - 1)];
    }
  }
  return PositiveZ(n, k, std::move(m));
}

std::vector<PositiveZ> z_panel(int n, int k, int count, std::uint64_t seed) {
  std::vector<PositiveZ> out;
  for (int idx = 0; idx < count; ++idx) {
    std::vector<Rat> nodes;
    if (idx == 0) {
      for (int i = 1; i <= n; ++i) nodes.push_back(Rat(i));
    } else {
      SplitMix64 gen(mix_seed(seed, static_cast<std::uint64_t>(idx)));
      for (int i = 1; i <= n; ++i) {
        // i + r with r in [0, 1/2]: keeps the nodes strictly increasing.
        Rat r(static_cast<long>(gen.below(1000)), 2000);
        r.canonicalize();
        nodes.push_back(Rat(i) + r);
      }
    }
    out.push_back(make_positive_Z(n, k, nodes));
  }
  return out;
}

RationalMatrix sample_positive_point(const IndexSet& cols, int k, std::uint64_t seed) {
  SplitMix64 gen(seed);
  RationalMatrix m(IndexSet::interval(1, k), cols);
  Rat node = 0;
  std::vector<Rat> nodes;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    node += gen.rational();  // strictly increasing positive nodes
    nodes.push_back(node);
  }
  for (int r = 1; r <= k; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Rat pw = 1;
      for (int e = 1; e < r; ++e) pw *= nodes[c];
      m.set(r, cols.at(c), pw);
    }
  return m;
}

RationalMatrix amap(const RationalMatrix& c, const PositiveZ& z) {
  const int k = static_cast<int>(c.row_count());
  RationalMatrix y(IndexSet::interval(1, k), IndexSet::interval(1, z.k() + 4));
  for (int r = 0; r < k; ++r)
    for (int col = 1; col <= z.k() + 4; ++col) {
      Rat v = 0;
      for (std::size_t m = 0; m < c.col_count(); ++m)
        v += c.at_pos(static_cast<std::size_t>(r), m) * z.entry(c.cols().at(m), col);
      y.set(r + 1, col, v);
    }
  if (y.rank() != static_cast<std::size_t>(k)) throw std::logic_error("amap: image is rank deficient");
  return y;
}

namespace {

Rat stacked_det(const RationalMatrix& y, const PositiveZ& z, const std::array<int, 4>& rows) {
  const std::size_t k = y.row_count();
  const std::size_t dim = k + 4;
  if (y.col_count() != dim) throw std::invalid_argument("twistor: Y must be k x (k+4)");
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < dim; ++c) m[r][c] = y.at_pos(r, c);
  RationalMatrix stacked(IndexSet::interval(1, static_cast<int>(dim)),
                         IndexSet::interval(1, static_cast<int>(dim)));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < dim; ++c) stacked.set(static_cast<int>(r + 1), static_cast<int>(c + 1), m[r][c]);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      stacked.set(static_cast<int>(k + r + 1), static_cast<int>(c + 1),
                  z.entry(rows[r], static_cast<int>(c + 1)));
  return stacked.det();
}

}  // namespace

Rat twistor(const RationalMatrix& y, const PositiveZ& z, const std::array<int, 4>& tuple) {
  CanonicalSymbol c = canonicalize_symbol(tuple);
  if (c.sign == 0) return 0;
  return Rat(c.sign) * stacked_det(y, z, c.symbol.idx);
}

Rat TwistorEvaluator::eval(const TwistorSymbol& symbol) {
  auto it = cache_.find(symbol);
  if (it != cache_.end()) return it->second;
  Rat v = stacked_det(*y_, *z_, symbol.idx);
  cache_.emplace(symbol, v);
  return v;
}

Rat TwistorEvaluator::eval_tuple(const std::array<int, 4>& ordered) {
  CanonicalSymbol c = canonicalize_symbol(ordered);
  if (c.sign == 0) return 0;
  return Rat(c.sign) * eval(c.symbol);
}

Rat TwistorEvaluator::eval_functionary(const Functionary& f) {
  Rat total = 0;
  for (const auto& [mono, coeff] : f.terms()) {
    Rat prod = coeff;
    for (const TwistorSymbol& s : mono) {
      if (sgn(prod) == 0) break;
      prod *= eval(s);
    }
    total += prod;
  }
  return total;
}

Rat eval_functionary(const Functionary& f, const RationalMatrix& y, const PositiveZ& z) {
  TwistorEvaluator ev(y, z);
  return ev.eval_functionary(f);
}

std::optional<std::pair<int, int>> in_S_partial_A(const RationalMatrix& c) {
  const std::size_t k = c.row_count();
  if (k == 0) return std::nullopt;
  const IndexSet& cols = c.cols();
  for (int i : cols) {
    for (int j : cols) {
      if (j <= i) continue;
      int i2 = cols.succ(i);
      int j2 = cols.succ(j);
      std::vector<int> support = {i, i2, j, j2};
      std::sort(support.begin(), support.end());
      if (std::unique(support.begin(), support.end()) != support.end()) continue;
      std::vector<int> complement;
      for (int m : cols)
        if (m != i && m != i2 && m != j && m != j2) complement.push_back(m);
      if (c.restrict_cols(IndexSet(complement)).rank() < k) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

namespace {

struct SignedFunctionary {
  std::string name;
  Functionary f;
  int sign;  // expected on the piece
};

std::vector<SignedFunctionary> piece_signature(int n, int k, int i, int k1) {
  std::vector<SignedFunctionary> sig;
  auto tw = [](std::array<int, 4> t) { return Functionary::twistor(t); };
  auto name = [](const std::string& base, int a, int b, int c, int d) {
    std::ostringstream os;
    os << base << '<' << a << ' ' << b << ' ' << c << ' ' << d << '>';
    return os.str();
  };
  int s1 = (k - k1 - 1) % 2 == 0 ? 1 : -1;
  int s2 = (k - k1) % 2 == 0 ? 1 : -1;
  sig.push_back({name("", i + 1, n - 2, n - 1, n), tw({i + 1, n - 2, n - 1, n}), s1});
  sig.push_back({name("", i, n - 2, n - 1, n), tw({i, n - 2, n - 1, n}), s2});
  sig.push_back({name("", i, i + 1, n - 2, n), tw({i, i + 1, n - 2, n}), -1});
  for (int j = i + 1; j <= n - 4; ++j)
    sig.push_back({"fav(" + std::to_string(i) + "|" + std::to_string(j) + ")",
                   favorite(i, i + 1, j, j + 1, n - 2, n - 1, n), -1});
  for (int j = 1; j <= i - 1; ++j)
    sig.push_back({"fav(" + std::to_string(j) + "|" + std::to_string(i) + ")",
                   favorite(j, j + 1, i, i + 1, n - 2, n - 1, n), 1});
  return sig;
}

}  // namespace

MiddleDecompositionReport check_middle_decomposition(int n, int k, std::uint64_t seed,
                                                     int samples_per_piece, int zs) {
  MiddleDecompositionReport rep;
  if (k < 1 || n < k + 4) throw std::invalid_argument("check_middle_decomposition: need k >= 1, n >= k+4");
  auto panel = z_panel(n, k, zs, mix_seed(seed, 999));
  std::vector<MiddlePiece> pieces;
  // pre_{n-1} Gr>_{k, [n] minus {n-1}}
  {
    MiddlePiece p;
    p.name = "pre";
    for (int s = 0; s < samples_per_piece; ++s) {
      RationalMatrix c = sample_positive_point(IndexSet::interval(1, n).without(n - 1), k,
                                               mix_seed(seed, 1000 + static_cast<std::uint64_t>(s)));
      p.samples.push_back(c.pre(n - 1));
    }
    pieces.push_back(std::move(p));
  }
  // S_{1,n;0,k-1} via the upper embedding.
  {
    MiddlePiece p;
    p.name = "S(j=1,k1=0)";
    p.i = 1;
    p.k1 = 0;
    for (int s = 0; s < samples_per_piece; ++s) {
      std::uint64_t sub = mix_seed(seed, 2000 + static_cast<std::uint64_t>(s));
      SplitMix64 gen(sub);
      RationalMatrix c = sample_positive_point(IndexSet::interval(2, n), k - 1, gen.next());
      EmbeddingParams params{gen.rationals(3), gen.rationals(1)};
      p.samples.push_back(c.iota(1, params));
    }
    pieces.push_back(std::move(p));
  }
  // Middle embeddings S_{j,n;k1,k2}.
  for (int k1 = 0; k1 <= k - 1; ++k1) {
    int k2 = k - 1 - k1;
    for (int j = k1 + 2; j <= n - k2 - 4; ++j) {
      MiddlePiece p;
      std::ostringstream nm;
      nm << "S(j=" << j << ",k1=" << k1 << ")";
      p.name = nm.str();
      p.i = j;
      p.k1 = k1;
      for (int s = 0; s < samples_per_piece; ++s) {
        std::uint64_t sub = mix_seed(seed, 3000 + static_cast<std::uint64_t>(100 * j + 10 * k1 + s));
        SplitMix64 gen(sub);
        RationalMatrix left = sample_positive_point(IndexSet::interval(1, j + 1).with(n), k1, gen.next());
        RationalMatrix right = sample_positive_point(IndexSet::interval(j, n - 1), k2, gen.next());
        p.samples.push_back(middle_embedding(j, gen.rational(), gen.rational(), gen.rational(),
                                             gen.rational(), left, right));
      }
      pieces.push_back(std::move(p));
    }
  }
  rep.pieces = static_cast<int>(pieces.size());

  auto check_sign = [&](const MiddlePiece& piece, const SignedFunctionary& sf) {
    for (const PositiveZ& z : panel)
      for (const RationalMatrix& c : piece.samples) {
        Rat v = eval_functionary(sf.f, amap(c, z), z);
        ++rep.checks;
        if (sgn(v) != sf.sign) {
          std::ostringstream os;
          os << piece.name << ": " << sf.name << " expected sign " << sf.sign << " got " << sgn(v);
          rep.failures.push_back(os.str());
          rep.ok = false;
        }
      }
  };

  // Per-piece signatures.
  for (const MiddlePiece& piece : pieces) {
    if (piece.k1 < 0) {
      for (int j = 1; j <= n - 4; ++j)
        check_sign(piece, {"<j j+1 n-2 n>", Functionary::twistor({j, j + 1, n - 2, n}), 1});
    } else {
      for (const SignedFunctionary& sf : piece_signature(n, k, piece.i, piece.k1)) check_sign(piece, sf);
    }
  }
  // Pairwise: a functionary with fixed opposite signs on the two pieces.
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      const MiddlePiece& pa = pieces[a];
      const MiddlePiece& pb = pieces[b];
      Functionary f;
      int sa;
      if (pa.k1 < 0 || pb.k1 < 0) {
        const MiddlePiece& mid = pa.k1 < 0 ? pb : pa;
        f = Functionary::twistor({mid.i, mid.i + 1, n - 2, n});
        sa = pa.k1 < 0 ? 1 : -1;
      } else if (pa.i != pb.i) {
        f = favorite(pa.i, pa.i + 1, pb.i, pb.i + 1, n - 2, n - 1, n);
        sa = -1;
      } else if ((pa.k1 % 2) != (pb.k1 % 2)) {
        f = Functionary::twistor({pa.i + 1, n - 2, n - 1, n});
        sa = (k - pa.k1 - 1) % 2 == 0 ? 1 : -1;
      } else {
        rep.failures.push_back("no distinguishing functionary listed for " + pa.name + " vs " + pb.name);
        rep.ok = false;
        continue;
      }
      check_sign(pa, {"sep(" + pa.name + "," + pb.name + ")", f, sa});
      check_sign(pb, {"sep(" + pa.name + "," + pb.name + ")", f, -sa});
    }
  }
  return rep;
}

}  // namespace bcfw
