#pragma once

#include <cstdint>
#include <vector>

#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

// Layered heavy/light edge classification of a tree for a branching
// parameter b >= 2, together with the derived heavy trees, branches, and the
// canonical (light-children-first) preorder.
//
// A node v with subtree size s(v) is on layer k iff n/b^(k+1) < s(v) <= n/b^k,
// evaluated in exact integer arithmetic. An edge is heavy iff its endpoints
// share a layer; heavy trees are the components under heavy edges; branches
// are the maximal single-heavy-child chains inside a heavy tree.
struct Decomposition {
  int b = 2;
  std::int64_t n = 0;  // node count of the decomposed tree

  std::vector<int> layer;                    // per node
  std::vector<std::int32_t> heavy_tree_id;   // per node
  std::vector<std::int32_t> branch_id;       // per node
  std::vector<bool> explicit_flag;           // per node; false = implicit
  std::vector<std::int64_t> size;            // per node, s(v)

  std::vector<NodeId> heavy_tree_root;       // per heavy tree
  std::vector<std::vector<std::int32_t>> heavy_tree_branches;  // per heavy tree
  std::vector<NodeId> branch_top;            // per branch
  std::vector<NodeId> branch_bottom;         // per branch
  std::vector<std::int32_t> branch_heavy_tree;  // per branch

  std::vector<std::uint32_t> canonical_pre;  // per node
  std::vector<NodeId> pre_to_node;           // inverse of canonical_pre

  int distinct_layers = 0;

  std::int32_t heavy_tree_count() const {
    return static_cast<std::int32_t>(heavy_tree_root.size());
  }
  std::int32_t branch_count() const {
    return static_cast<std::int32_t>(branch_top.size());
  }
  bool edge_is_heavy(NodeId parent, NodeId child) const {
    return layer[parent] == layer[child];
  }
  // Weak-ancestor test in canonical preorder terms.
  bool is_weak_ancestor(NodeId u, NodeId v) const {
    return canonical_pre[u] <= canonical_pre[v] &&
           canonical_pre[v] < canonical_pre[u] + static_cast<std::uint32_t>(size[u]);
  }
};

// Rejects b < 2. Deterministic for a fixed input.
Decomposition decompose(const WeightedLabelledTree& tree, int b);

// Preorder visiting children over light edges before children over heavy
// edges; stored child order is preserved within each class.
struct PreorderMap {
  std::vector<std::uint32_t> pre;
  std::vector<NodeId> node;
};
PreorderMap canonical_preorder(const WeightedLabelledTree& tree,
                               const Decomposition& d);

// One entry per heavy tree on the root-to-v path, topmost first. `anchor` is
// the lowest weak ancestor of v inside that heavy tree: the parent of the
// next entry's heavy-tree root, or v itself for the last entry.
struct PathEntry {
  std::int32_t heavy_tree;
  NodeId anchor;
};
std::vector<PathEntry> heavy_tree_sequence(const WeightedLabelledTree& tree,
                                           const Decomposition& d, NodeId v);

// Alternating tree of heavy-tree nodes and branch nodes: each heavy-tree
// node's children are its branches; each non-root heavy tree hangs off the
// branch containing the parent of its root.
struct BranchTree {
  std::int32_t ht_count = 0;
  std::int32_t branch_count = 0;
  std::int32_t root = 0;
  std::vector<std::int32_t> parent;                 // kNoNode for root
  std::vector<std::vector<std::int32_t>> children;

  std::int32_t ht_node(std::int32_t ht) const { return ht; }
  std::int32_t branch_node(std::int32_t branch) const { return ht_count + branch; }
  bool is_branch_node(std::int32_t id) const { return id >= ht_count; }
  std::int32_t node_count() const { return ht_count + branch_count; }
  std::int32_t as_heavy_tree(std::int32_t id) const { return id; }
  std::int32_t as_branch(std::int32_t id) const { return id - ht_count; }
  int depth() const;
};
BranchTree build_branch_tree(const WeightedLabelledTree& tree,
                             const Decomposition& d);

}  // namespace hia
