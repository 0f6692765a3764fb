#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hia/types.hpp"

namespace hia {

// Rooted tree whose node weights strictly increase along every root-to-leaf
// path and whose leaves carry pairwise-distinct labels. Nodes are dense ids
// 0..node_count-1; internal nodes have leaf_label == kNoLabel.
struct WeightedLabelledTree {
  NodeId node_count = 0;
  NodeId root = kNoNode;
  std::vector<NodeId> parent;                 // kNoNode for the root
  std::vector<std::vector<NodeId>> children;  // stored child order
  std::vector<Weight> weight;
  std::vector<Label> leaf_label;

  bool is_leaf(NodeId v) const { return children[v].empty(); }
  NodeId leaf_count() const;

  // Builds the children lists from a parent array. Labels may be left empty
  // and filled in later; missing entries default to kNoLabel.
  static WeightedLabelledTree from_parents(std::vector<NodeId> parents,
                                           std::vector<Weight> weights,
                                           std::vector<Label> labels = {});
};

enum class ViolationKind {
  kBadStructure,         // no/multiple roots, inconsistent links, cycle
  kNonIncreasingWeight,  // weight(child) <= weight(parent)
  kDuplicateLabel,
  kUnlabelledLeaf,
  kLabelledInternal,
};

struct Violation {
  ViolationKind kind;
  NodeId node = kNoNode;  // offending node (child for edge violations)
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const WeightedLabelledTree& tree);

// s(v): number of nodes in v's subtree, including v.
std::vector<std::int64_t> subtree_sizes(const WeightedLabelledTree& tree);

// Two trees plus the intersection of their leaf-label sets. Label sets need
// not coincide; queries with no shared label under both roots simply have no
// induced pair.
struct TreePair {
  WeightedLabelledTree t1;
  WeightedLabelledTree t2;
  std::vector<Label> shared_labels;  // sorted
  std::unordered_map<Label, NodeId> leaf_of_label1;
  std::unordered_map<Label, NodeId> leaf_of_label2;

  static TreePair make(WeightedLabelledTree t1, WeightedLabelledTree t2);
};

}  // namespace hia
