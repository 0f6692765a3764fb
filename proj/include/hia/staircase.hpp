#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hia/decomposition.hpp"
#include "hia/oracle.hpp"
#include "hia/substructures.hpp"
#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

// Raw 2-D points (canonical preorder numbers) collected for one branch pair.
struct RawPoints {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
};

// Dominance-pruned point set: xs strictly ascending, ys strictly descending.
// dx/dy are predecessor lists over the x- and y-coordinates; weight_rmq holds
// the combined weights in x order.
struct Staircase {
  std::vector<std::uint32_t> xs;
  std::vector<std::uint32_t> ys;
  PredecessorList dx;
  PredecessorList dy;  // over ys sorted ascending
  RmqMax weight_rmq;

  std::size_t size() const { return xs.size(); }
};

// Per-branch-pair point sets keyed by (branch1 << 32 | branch2).
struct PointSink {
  std::unordered_map<std::uint64_t, RawPoints> by_branch_pair;
  std::uint64_t emitted = 0;

  static std::uint64_t key(std::int32_t e1, std::int32_t e2) {
    return PairDictionary::key(e1, e2);
  }
};

// Everything add_label needs about one side of the pair.
struct SideContext {
  const WeightedLabelledTree* tree;
  const Decomposition* decomposition;
  const LcaStructure* lca;
};

// Records the heavy-tree pairs occurring on query paths of equal-label leaf
// pairs. Membership is equivalent to the heavy trees' roots being induced.
PairDictionary collect_relevant_pairs(const TreePair& pair, const SideContext& s1,
                                      const SideContext& s2);

// Emits one point per branch pair of every heavy-tree pair on the two query
// paths of the (same-label) leaves l1, l2. Throws if the labels differ.
void add_label(const SideContext& s1, const SideContext& s2, NodeId l1, NodeId l2,
               PointSink& sink);

// Deduplicates, prunes dominated points, and freezes the query structures.
// w*_by_pre give node weights indexed by canonical preorder number.
Staircase postprocess(const RawPoints& raw,
                      const std::vector<Weight>& w1_by_pre,
                      const std::vector<Weight>& w2_by_pre);

// Boundary index beta such that points[0..beta) have x < pre_x1 and
// points[beta..) have x >= pre_x1. The predecessor search is keyed by pre_v1;
// one comparison against pre_x1 settles the boundary element's side.
std::size_t split_x(const Staircase& st, std::uint32_t pre_v1, std::uint32_t pre_x1,
                    long* comparisons = nullptr);
// Count of points with y < pre_x2, via the same two-key reduction.
std::size_t split_y(const Staircase& st, std::uint32_t pre_v2, std::uint32_t pre_x2,
                    long* comparisons = nullptr);

// Turns a predecessor rank in the x-list (nullopt = none) into the split_x
// boundary; shared by the independent and cascading engines.
std::size_t beta_from_rank_x(const Staircase& st, std::optional<std::size_t> rank,
                             std::uint32_t pre_x1, long* comparisons = nullptr);
std::size_t beta_from_rank_y(const Staircase& st, std::optional<std::size_t> rank,
                             std::uint32_t pre_x2, long* comparisons = nullptr);

// Node weights and preorder lookups needed to materialize candidate pairs.
struct TreesView {
  const std::vector<NodeId>* pre_to_node1;
  const std::vector<NodeId>* pre_to_node2;
  const std::vector<Weight>* w1_by_pre;
  const std::vector<Weight>* w2_by_pre;
  const std::vector<Weight>* w1_by_node;
  const std::vector<Weight>* w2_by_node;
};

// Four-case restricted query over one staircase. beta_x = split_x boundary,
// beta_y = split_y count. case_mask is a test-only fault-injection knob; bit
// i-1 enables case i.
std::optional<PairAnswer> restricted_hia(const Staircase& st, NodeId x1, NodeId x2,
                                         std::size_t beta_x, std::size_t beta_y,
                                         const TreesView& view,
                                         unsigned case_mask = 0xF);

}  // namespace hia
