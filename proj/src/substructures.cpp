#include "hia/substructures.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hia {

LcaStructure LcaStructure::build(const WeightedLabelledTree& tree) {
  LcaStructure s;
  s.first_occurrence.assign(tree.node_count, -1);
  s.tour.reserve(2 * tree.node_count);
  s.tour_depth.reserve(2 * tree.node_count);

  // Iterative Euler tour: (node, depth, next-child index).
  struct Frame {
    NodeId node;
    std::int32_t depth;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({tree.root, 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == 0) {
      s.first_occurrence[f.node] = static_cast<std::int32_t>(s.tour.size());
      s.tour.push_back(f.node);
      s.tour_depth.push_back(f.depth);
    }
    if (f.next < tree.children[f.node].size()) {
      NodeId c = tree.children[f.node][f.next++];
      stack.push_back({c, f.depth + 1, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        s.tour.push_back(stack.back().node);
        s.tour_depth.push_back(stack.back().depth);
      }
    }
  }

  const std::size_t m = s.tour.size();
  const int levels = m > 0 ? std::bit_width(m) : 1;
  s.table.assign(levels, std::vector<std::int32_t>(m));
  for (std::size_t i = 0; i < m; ++i) s.table[0][i] = static_cast<std::int32_t>(i);
  for (int k = 1; k < levels; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    for (std::size_t i = 0; i + (std::size_t{1} << k) <= m; ++i) {
      std::int32_t a = s.table[k - 1][i];
      std::int32_t b = s.table[k - 1][i + half];
      s.table[k][i] = s.tour_depth[a] <= s.tour_depth[b] ? a : b;
    }
  }
  return s;
}

NodeId LcaStructure::lca(NodeId u, NodeId v) const {
  std::size_t i = static_cast<std::size_t>(first_occurrence[u]);
  std::size_t j = static_cast<std::size_t>(first_occurrence[v]);
  if (i > j) std::swap(i, j);
  const int k = std::bit_width(j - i + 1) - 1;
  std::int32_t a = table[k][i];
  std::int32_t b = table[k][j + 1 - (std::size_t{1} << k)];
  return tour[tour_depth[a] <= tour_depth[b] ? a : b];
}

PredecessorList PredecessorList::build(std::vector<std::uint32_t> sorted_values) {
  PredecessorList list;
  list.values = std::move(sorted_values);
  return list;
}

std::optional<PredecessorList::Hit> PredecessorList::predecessor(
    std::uint32_t q, long* comparisons) const {
  std::size_t lo = 0, hi = values.size();  // first index with value > q
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (comparisons) ++*comparisons;
    if (values[mid] <= q) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return std::nullopt;
  return Hit{values[lo - 1], lo - 1};
}

RmqMax RmqMax::build(std::vector<Weight> values) {
  RmqMax r;
  r.values = std::move(values);
  const std::size_t m = r.values.size();
  const int levels = m > 0 ? std::bit_width(m) : 1;
  r.table.assign(levels, std::vector<std::uint32_t>(m));
  for (std::size_t i = 0; i < m; ++i) r.table[0][i] = static_cast<std::uint32_t>(i);
  for (int k = 1; k < levels; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    for (std::size_t i = 0; i + (std::size_t{1} << k) <= m; ++i) {
      std::uint32_t a = r.table[k - 1][i];
      std::uint32_t b = r.table[k - 1][i + half];
      r.table[k][i] = r.values[a] >= r.values[b] ? a : b;
    }
  }
  return r;
}

RmqMax::Result RmqMax::range_max(std::size_t i, std::size_t j) const {
  if (i > j || j >= values.size()) {
    throw std::invalid_argument("range_max: bad interval");
  }
  const int k = std::bit_width(j - i + 1) - 1;
  std::uint32_t a = table[k][i];
  std::uint32_t b = table[k][j + 1 - (std::size_t{1} << k)];
  std::uint32_t best = values[a] >= values[b] ? a : b;
  return {best, values[best]};
}

void PairDictionary::finalize() {
  keys_sorted.assign(members.begin(), members.end());
  std::sort(keys_sorted.begin(), keys_sorted.end());
}

}  // namespace hia
