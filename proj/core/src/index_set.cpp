#include "bcfw/index_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bcfw {

IndexSet::IndexSet(std::vector<int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i + 1 < elems_.size(); ++i)
    if (elems_[i] == elems_[i + 1]) throw std::invalid_argument("IndexSet: duplicate element");
  if (!elems_.empty() && elems_.front() < 1)
    throw std::invalid_argument("IndexSet: elements must be positive");
}

IndexSet::IndexSet(std::initializer_list<int> elements)
    : IndexSet(std::vector<int>(elements)) {}

IndexSet IndexSet::interval(int lo, int hi) {
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x) v.push_back(x);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t IndexSet::position(int x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x)
    throw std::out_of_range("IndexSet: missing element " + std::to_string(x));
  return static_cast<std::size_t>(it - elems_.begin());
}

int IndexSet::min() const {
  if (elems_.empty()) throw std::out_of_range("IndexSet: empty");
  return elems_.front();
}

int IndexSet::max() const {
  if (elems_.empty()) throw std::out_of_range("IndexSet: empty");
  return elems_.back();
}

int IndexSet::succ(int x) const {
  std::size_t p = position(x);
  return elems_[(p + 1) % elems_.size()];
}

int IndexSet::pred(int x) const {
  std::size_t p = position(x);
  return elems_[(p + elems_.size() - 1) % elems_.size()];
}

int IndexSet::succ(int x, int steps) const {
  for (int s = 0; s < steps; ++s) x = succ(x);
  return x;
}

int IndexSet::pred(int x, int steps) const {
  for (int s = 0; s < steps; ++s) x = pred(x);
  return x;
}

IndexSet IndexSet::with(int x) const {
  if (contains(x)) throw std::invalid_argument("IndexSet: element already present");
  std::vector<int> v = elems_;
  v.push_back(x);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::without(int x) const {
  std::size_t p = position(x);
  std::vector<int> v = elems_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(p));
  IndexSet out;
  out.elems_ = std::move(v);
  return out;
}

IndexSet IndexSet::slice(int lo, int hi) const {
  std::vector<int> v;
  for (int x : elems_)
    if (lo <= x && x <= hi) v.push_back(x);
  IndexSet out;
  out.elems_ = std::move(v);
  return out;
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

}  // namespace bcfw
