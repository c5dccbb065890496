#include "bcfw/twistor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bcfw {

CanonicalSymbol canonicalize_symbol(const std::array<int, 4>& ordered) {
  CanonicalSymbol out;
  std::array<int, 4> v = ordered;
  int sign = 1;
  for (int pass = 0; pass < 3; ++pass)
    for (int p = 0; p + 1 < 4; ++p)
      if (v[p] > v[p + 1]) {
        std::swap(v[p], v[p + 1]);
        sign = -sign;
      }
  for (int p = 0; p + 1 < 4; ++p)
    if (v[p] == v[p + 1]) return out;  // sign 0
  out.symbol.idx = v;
  out.sign = sign;
  return out;
}

Functionary Functionary::twistor(const std::array<int, 4>& ordered) {
  Functionary f;
  CanonicalSymbol c = canonicalize_symbol(ordered);
  if (c.sign != 0) f.add_term({c.symbol}, Rat(c.sign));
  return f;
}

void Functionary::add_term(Monomial monomial, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  std::sort(monomial.begin(), monomial.end());
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(std::move(monomial), coeff);
  } else {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Functionary::degree() const {
  if (terms_.empty()) return 0;
  return static_cast<int>(terms_.begin()->first.size());
}

Functionary Functionary::plus(const Functionary& o) const {
  Functionary out = *this;
  for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, coeff);
  return out;
}

Functionary Functionary::times(const Functionary& o) const {
  Functionary out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

Functionary Functionary::scaled(const Rat& c) const {
  Functionary out;
  if (sgn(c) == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
  return out;
}

namespace {
std::vector<int> monomial_type(const Functionary::Monomial& m) {
  std::vector<int> t;
  for (const TwistorSymbol& s : m) t.insert(t.end(), s.idx.begin(), s.idx.end());
  std::sort(t.begin(), t.end());
  return t;
}
}  // namespace

bool Functionary::is_pure() const {
  if (terms_.empty()) return true;
  std::vector<int> t = monomial_type(terms_.begin()->first);
  for (const auto& [mono, coeff] : terms_)
    if (monomial_type(mono) != t) return false;
  return true;
}

std::vector<int> Functionary::type() const {
  if (terms_.empty()) return {};
  return monomial_type(terms_.begin()->first);
}

int Functionary::multiplicity(int index) const {
  std::vector<int> t = type();
  return static_cast<int>(std::count(t.begin(), t.end(), index));
}

std::string Functionary::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (sgn(coeff) > 0 ? "+" : "") << rat_str(coeff);
    for (const TwistorSymbol& s : mono) {
      os << "*<" << s.idx[0] << ' ' << s.idx[1] << ' ' << s.idx[2] << ' ' << s.idx[3] << '>';
    }
  }
  return os.str();
}

Functionary Functionary::parse_text(const std::string& text) {
  Functionary out;
  if (text == "0") return out;
  std::istringstream is(text);
  std::string term;
  while (is >> term) {
    auto star = term.find('*');
    Rat coeff = rat_parse(star == std::string::npos ? term : term.substr(0, star));
    Monomial mono;
    std::size_t pos = star;
    while (pos != std::string::npos) {
      auto lt = term.find('<', pos);
      if (lt == std::string::npos) break;
      auto gt = term.find('>', lt);
      if (gt == std::string::npos) throw std::invalid_argument("bad functionary text");
      std::istringstream nums(term.substr(lt + 1, gt - lt - 1));
      TwistorSymbol s;
      nums >> s.idx[0] >> s.idx[1] >> s.idx[2] >> s.idx[3];
      mono.push_back(s);
      pos = gt;
    }
    out.add_term(std::move(mono), coeff);
  }
  return out;
}

std::string Functionary::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coeff] : terms_) {
    nlohmann::json symbols = nlohmann::json::array();
    for (const TwistorSymbol& s : mono) symbols.push_back(s.idx);
    terms.push_back({{"coeff", rat_str(coeff)}, {"symbols", symbols}});
  }
  nlohmann::json j;
  j["terms"] = std::move(terms);
  return j.dump();
}

Functionary Functionary::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Functionary out;
  for (const auto& term : j.at("terms")) {
    Monomial mono;
    for (const auto& sym : term.at("symbols")) {
      TwistorSymbol s;
      for (int p = 0; p < 4; ++p) s.idx[static_cast<std::size_t>(p)] = sym.at(p).get<int>();
      mono.push_back(s);
    }
    out.add_term(std::move(mono), rat_parse(term.at("coeff").get<std::string>()));
  }
  return out;
}

Functionary favorite(int i, int i2, int j, int j2, int h, int h2, int l) {
  Functionary a = Functionary::twistor({i, j, j2, l}).times(Functionary::twistor({i2, h, h2, l}));
  Functionary b = Functionary::twistor({i2, j, j2, l}).times(Functionary::twistor({i, h, h2, l}));
  return a.plus(b.negated());
}

}  // namespace bcfw
