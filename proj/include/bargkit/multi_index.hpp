#pragma once

#include <vector>

namespace bargkit {

// Multi-index in N_0^d.  Immutable after construction; entries must be
// non-negative.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  static MultiIndex zeros(int dim);

  int dim() const { return static_cast<int>(entries_.size()); }
  int order() const { return order_; }
  int operator[](int j) const { return entries_[static_cast<size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  // log(alpha!) = sum_j log(alpha_j!)
  double log_factorial() const;

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
  bool operator!=(const MultiIndex& o) const { return entries_ != o.entries_; }

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

// Strict weak ordering by (|alpha|, lexicographic entries).  Coefficient
// tables keyed with this comparator iterate in increasing total order, which
// fixes the summation order everywhere.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Every alpha with the given dimension and |alpha| <= max_order, sorted by
// GradedLexLess.
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_order);

}  // namespace bargkit
