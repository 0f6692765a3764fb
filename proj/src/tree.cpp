#include "hia/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hia {

NodeId WeightedLabelledTree::leaf_count() const {
  NodeId leaves = 0;
  for (NodeId v = 0; v < node_count; ++v) {
    if (is_leaf(v)) ++leaves;
  }
  return leaves;
}

WeightedLabelledTree WeightedLabelledTree::from_parents(
    std::vector<NodeId> parents, std::vector<Weight> weights,
    std::vector<Label> labels) {
  WeightedLabelledTree t;
  t.node_count = static_cast<NodeId>(parents.size());
  t.parent = std::move(parents);
  t.weight = std::move(weights);
  t.children.assign(t.node_count, {});
  if (labels.empty()) labels.assign(t.node_count, kNoLabel);
  t.leaf_label = std::move(labels);
  for (NodeId v = 0; v < t.node_count; ++v) {
    if (t.parent[v] == kNoNode) {
      t.root = v;
    } else if (t.parent[v] >= 0 && t.parent[v] < t.node_count) {
      t.children[t.parent[v]].push_back(v);
    }
  }
  return t;
}

ValidationReport validate(const WeightedLabelledTree& tree) {
  ValidationReport report;
  const NodeId n = tree.node_count;
  auto add = [&](ViolationKind kind, NodeId node, std::string msg) {
    report.violations.push_back({kind, node, std::move(msg)});
  };

  if (n <= 0 || static_cast<NodeId>(tree.parent.size()) != n ||
      static_cast<NodeId>(tree.children.size()) != n ||
      static_cast<NodeId>(tree.weight.size()) != n ||
      static_cast<NodeId>(tree.leaf_label.size()) != n) {
    add(ViolationKind::kBadStructure, kNoNode, "array sizes inconsistent with node_count");
    return report;
  }

  NodeId roots = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (tree.parent[v] == kNoNode) {
      ++roots;
      if (tree.root != v) add(ViolationKind::kBadStructure, v, "root field does not match parent array");
    } else if (tree.parent[v] < 0 || tree.parent[v] >= n) {
      add(ViolationKind::kBadStructure, v, "parent id out of range at node " + std::to_string(v));
    }
  }
  if (roots != 1) {
    add(ViolationKind::kBadStructure, kNoNode,
        "expected exactly one root, found " + std::to_string(roots));
    return report;
  }

  // parent/children mutual consistency
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId c : tree.children[v]) {
      if (c < 0 || c >= n || tree.parent[c] != v) {
        add(ViolationKind::kBadStructure, v, "children list inconsistent at node " + std::to_string(v));
      }
    }
    if (tree.parent[v] != kNoNode) {
      const auto& sib = tree.children[tree.parent[v]];
      if (std::find(sib.begin(), sib.end(), v) == sib.end()) {
        add(ViolationKind::kBadStructure, v,
            "node " + std::to_string(v) + " missing from its parent's children");
      }
    }
  }
  if (!report.ok()) return report;

  // acyclicity / reachability from the root
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack = {tree.root};
  NodeId visited = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen[v]) {
      add(ViolationKind::kBadStructure, v, "cycle at node " + std::to_string(v));
      return report;
    }
    seen[v] = 1;
    ++visited;
    for (NodeId c : tree.children[v]) stack.push_back(c);
  }
  if (visited != n) {
    add(ViolationKind::kBadStructure, kNoNode, "nodes unreachable from root");
    return report;
  }

  for (NodeId v = 0; v < n; ++v) {
    if (tree.parent[v] == kNoNode) continue;
    if (tree.weight[v] <= tree.weight[tree.parent[v]]) {
      add(ViolationKind::kNonIncreasingWeight, v,
          "non-increasing weight at edge (" + std::to_string(tree.parent[v]) + ", " +
              std::to_string(v) + ")");
    }
  }

  std::map<Label, std::vector<NodeId>> by_label;
  for (NodeId v = 0; v < n; ++v) {
    if (tree.is_leaf(v)) {
      if (tree.leaf_label[v] == kNoLabel) {
        add(ViolationKind::kUnlabelledLeaf, v, "leaf " + std::to_string(v) + " has no label");
      } else {
        by_label[tree.leaf_label[v]].push_back(v);
      }
    } else if (tree.leaf_label[v] != kNoLabel) {
      add(ViolationKind::kLabelledInternal, v,
          "internal node " + std::to_string(v) + " carries a leaf label");
    }
  }
  for (const auto& [label, nodes] : by_label) {
    if (nodes.size() > 1) {
      add(ViolationKind::kDuplicateLabel, nodes[1], "duplicate label " + std::to_string(label));
    }
  }
  return report;
}

std::vector<std::int64_t> subtree_sizes(const WeightedLabelledTree& tree) {
  std::vector<std::int64_t> s(tree.node_count, 1);
  // children always have larger ids than their parent in generated trees, but
  // that is not guaranteed in general; process in reverse topological order.
  std::vector<NodeId> order;
  order.reserve(tree.node_count);
  std::vector<NodeId> stack = {tree.root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (NodeId c : tree.children[v]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (tree.parent[v] != kNoNode) s[tree.parent[v]] += s[v];
  }
  return s;
}

TreePair TreePair::make(WeightedLabelledTree t1, WeightedLabelledTree t2) {
  TreePair pair;
  pair.t1 = std::move(t1);
  pair.t2 = std::move(t2);
  for (NodeId v = 0; v < pair.t1.node_count; ++v) {
    if (pair.t1.is_leaf(v) && pair.t1.leaf_label[v] != kNoLabel) {
      pair.leaf_of_label1[pair.t1.leaf_label[v]] = v;
    }
  }
  for (NodeId v = 0; v < pair.t2.node_count; ++v) {
    if (pair.t2.is_leaf(v) && pair.t2.leaf_label[v] != kNoLabel) {
      pair.leaf_of_label2[pair.t2.leaf_label[v]] = v;
    }
  }
  for (const auto& [label, node] : pair.leaf_of_label1) {
    if (pair.leaf_of_label2.count(label)) pair.shared_labels.push_back(label);
  }
  std::sort(pair.shared_labels.begin(), pair.shared_labels.end());
  return pair;
}

}  // namespace hia
