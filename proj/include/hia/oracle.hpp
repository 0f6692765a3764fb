#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hia/decomposition.hpp"
#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

// Per-node bitsets of shared labels occurring at leaf descendants.
struct LabelSets {
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;  // node_count x words

  static LabelSets build(const WeightedLabelledTree& tree,
                         const std::vector<Label>& shared_labels);
  const std::uint64_t* row(NodeId v) const { return bits.data() + words * v; }
};

// Exhaustive reference implementations; every property test and acceptance
// criterion checks against these.
struct BruteOracle {
  const TreePair* pair = nullptr;
  LabelSets sets1, sets2;

  static BruteOracle build(const TreePair& pair);

  bool induced(NodeId u1, NodeId u2) const;
  // First shared-label bit common to both nodes, as a label value.
  std::optional<Label> witness_label(NodeId u1, NodeId u2) const;

  // Maximum-weight induced ancestor pair of (v1, v2); nullopt if none.
  std::optional<PairAnswer> hia(NodeId v1, NodeId v2) const;

  // As above but with ancestors restricted to the given heavy trees.
  std::optional<PairAnswer> restricted_hia(NodeId v1, NodeId v2,
                                           const Decomposition& d1,
                                           const Decomposition& d2,
                                           std::int32_t ht1, std::int32_t ht2) const;
};

}  // namespace hia
