#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace bcfw {

// A finite set of positive integers with cyclic successor/predecessor
// arithmetic: succ(max) == min. Used to index both rows and columns of
// matrices, so that insertion operations never need relabeling.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> elements);
  IndexSet(std::initializer_list<int> elements);

  // {lo, lo+1, ..., hi}
  static IndexSet interval(int lo, int hi);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(int x) const;
  // Position of x in sorted order; throws if absent.
  std::size_t position(int x) const;
  int at(std::size_t pos) const { return elems_.at(pos); }
  int min() const;
  int max() const;

  // Cyclic arithmetic: the next-largest element, wrapping max -> min.
  int succ(int x) const;
  int pred(int x) const;
  int succ(int x, int steps) const;
  int pred(int x, int steps) const;

  IndexSet with(int x) const;     // insert
  IndexSet without(int x) const;  // erase
  // Elements of this set also contained in [lo, hi].
  IndexSet slice(int lo, int hi) const;

  const std::vector<int>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const IndexSet& o) const = default;

  std::string str() const;

 private:
  std::vector<int> elems_;  // strictly increasing
};

}  // namespace bcfw
