#include "bcfw/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace bcfw {

DecoratedPermutation DecoratedPermutation::identity(const IndexSet& domain) {
  DecoratedPermutation p;
  p.domain_ = domain;
  p.image_ = domain.elements();
  return p;
}

int DecoratedPermutation::apply(int x) const { return image_[domain_.position(x)]; }

int DecoratedPermutation::inverse(int x) const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] == x) return domain_.at(i);
  throw std::out_of_range("DecoratedPermutation: value not in image");
}

void DecoratedPermutation::set_image(int x, int image) {
  image_[domain_.position(x)] = image;
}

void DecoratedPermutation::set_white(int x, bool white) {
  if (white) {
    if (apply(x) != x) throw std::invalid_argument("white mark on non fixed point");
    white_.insert(x);
  } else {
    white_.erase(x);
  }
}

std::vector<int> DecoratedPermutation::anti_excedances() const {
  std::vector<int> out;
  for (int m : domain_)
    if (inverse(m) > m || is_white(m)) out.push_back(m);
  return out;
}

DecoratedPermutation DecoratedPermutation::from_cycles(
    const IndexSet& domain, const std::vector<std::vector<int>>& cycles) {
  DecoratedPermutation p = identity(domain);
  // Rightmost cycle acts first: apply(x) follows cycles from the end.
  for (int x : domain) {
    int v = x;
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto& cyc = *it;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (cyc[i] == v) {
          v = cyc[(i + 1) % cyc.size()];
          break;
        }
      }
    }
    p.set_image(x, v);
  }
  return p;
}

std::vector<int> DecoratedPermutation::images() const { return image_; }

bool DecoratedPermutation::same_mapping(const DecoratedPermutation& o) const {
  return domain_ == o.domain_ && image_ == o.image_;
}

bool DecoratedPermutation::operator==(const DecoratedPermutation& o) const {
  return same_mapping(o) && white_ == o.white_;
}

std::string DecoratedPermutation::two_line() const {
  std::ostringstream top, bot;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) {
      top << ' ';
      bot << ' ';
    }
    top << domain_.at(i);
    bot << image_[i];
    if (is_white(domain_.at(i))) bot << '*';
  }
  return top.str() + "\n" + bot.str();
}

}  // namespace bcfw
