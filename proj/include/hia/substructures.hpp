#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

// Constant-time LCA via Euler tour + sparse table over tour depths.
struct LcaStructure {
  std::vector<std::int32_t> first_occurrence;  // per node, index into tour
  std::vector<NodeId> tour;
  std::vector<std::int32_t> tour_depth;
  std::vector<std::vector<std::int32_t>> table;  // argmin of depth per dyadic block

  static LcaStructure build(const WeightedLabelledTree& tree);
  NodeId lca(NodeId u, NodeId v) const;
};

// Sorted list of distinct integers supporting predecessor queries by binary
// search. `comparisons`, when given, is incremented once per probe.
struct PredecessorList {
  std::vector<std::uint32_t> values;

  struct Hit {
    std::uint32_t value;
    std::size_t rank;
  };

  static PredecessorList build(std::vector<std::uint32_t> sorted_values);
  // Largest stored value <= q, with its rank; nullopt if all values exceed q.
  std::optional<Hit> predecessor(std::uint32_t q, long* comparisons = nullptr) const;
  std::size_t size() const { return values.size(); }
};

// Sparse-table argmax; ties resolved toward the smallest index.
struct RmqMax {
  std::vector<Weight> values;
  std::vector<std::vector<std::uint32_t>> table;

  struct Result {
    std::size_t index;
    Weight value;
  };

  static RmqMax build(std::vector<Weight> values);
  Result range_max(std::size_t i, std::size_t j) const;  // throws on bad range
};

// Membership of heavy-tree pairs recorded during preprocessing. Keys iterate
// in a canonical (sorted) order regardless of insertion order.
struct PairDictionary {
  std::vector<std::uint64_t> keys_sorted;
  std::unordered_set<std::uint64_t> members;

  static std::uint64_t key(std::int32_t h1, std::int32_t h2) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(h1)) << 32) |
           static_cast<std::uint32_t>(h2);
  }
  void insert(std::int32_t h1, std::int32_t h2) { members.insert(key(h1, h2)); }
  void finalize();  // freezes keys_sorted
  bool contains(std::int32_t h1, std::int32_t h2) const {
    return members.count(key(h1, h2)) != 0;
  }
  std::size_t size() const { return members.size(); }
};

}  // namespace hia
