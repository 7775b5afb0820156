#include "bargkit/multi_index.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bargkit {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
  order_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::zeros(int dim) {
  return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0));
}

double MultiIndex::log_factorial() const {
  double s = 0.0;
  for (int e : entries_) s += std::lgamma(static_cast<double>(e) + 1.0);
  return s;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.entries() < b.entries();
}

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_order) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (max_order < 0) throw std::invalid_argument("max_order must be non-negative");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<size_t>(dim), 0);
  // For each total order, walk the compositions in lexicographic order.
  for (int total = 0; total <= max_order; ++total) {
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == dim - 1) {
        cur[static_cast<size_t>(pos)] = remaining;
        out.emplace_back(cur);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    rec(rec, 0, total);
  }
  return out;
}

}  // namespace bargkit
