#include "hia/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace hia {

namespace {

void random_weights(Rng& rng, WeightedLabelledTree& t) {
  for (NodeId v = 0; v < t.node_count; ++v) {
    // Parents precede children in all generated shapes.
    t.weight[v] = v == t.root ? 0 : t.weight[t.parent[v]] + 1 + rng.below(10);
  }
}

}  // namespace

WeightedLabelledTree random_recursive_tree(Rng& rng, NodeId n) {
  std::vector<NodeId> parents(n);
  parents[0] = kNoNode;
  for (NodeId i = 1; i < n; ++i) {
    parents[i] = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(i)));
  }
  auto t = WeightedLabelledTree::from_parents(std::move(parents),
                                              std::vector<Weight>(n, 0));
  random_weights(rng, t);
  return t;
}

WeightedLabelledTree path_tree(NodeId n) {
  std::vector<NodeId> parents(n);
  std::vector<Weight> weights(n);
  for (NodeId i = 0; i < n; ++i) {
    parents[i] = i - 1;  // node 0 gets kNoNode
    weights[i] = static_cast<Weight>(i);
  }
  parents[0] = kNoNode;
  return WeightedLabelledTree::from_parents(std::move(parents), std::move(weights));
}

WeightedLabelledTree star_tree(NodeId n) {
  std::vector<NodeId> parents(n, 0);
  std::vector<Weight> weights(n, 1);
  parents[0] = kNoNode;
  weights[0] = 0;
  return WeightedLabelledTree::from_parents(std::move(parents), std::move(weights));
}

WeightedLabelledTree caterpillar_tree(NodeId n) {
  // Spine of ceil(n/2) nodes, one leaf hanging off each spine node.
  std::vector<NodeId> parents(n);
  std::vector<Weight> weights(n);
  NodeId spine = (n + 1) / 2;
  for (NodeId i = 0; i < spine; ++i) {
    parents[i] = i - 1;
    weights[i] = static_cast<Weight>(i);
  }
  parents[0] = kNoNode;
  for (NodeId i = spine; i < n; ++i) {
    parents[i] = i - spine;
    weights[i] = weights[i - spine] + 1;
  }
  return WeightedLabelledTree::from_parents(std::move(parents), std::move(weights));
}

WeightedLabelledTree balanced_binary_tree(NodeId n) {
  std::vector<NodeId> parents(n);
  std::vector<Weight> weights(n);
  for (NodeId i = 0; i < n; ++i) {
    parents[i] = i == 0 ? kNoNode : (i - 1) / 2;
    weights[i] = i == 0 ? 0 : weights[(i - 1) / 2] + 1;
  }
  return WeightedLabelledTree::from_parents(std::move(parents), std::move(weights));
}

void assign_label_bijection(Rng& rng, WeightedLabelledTree& t1,
                            WeightedLabelledTree& t2) {
  std::vector<NodeId> leaves1, leaves2;
  for (NodeId v = 0; v < t1.node_count; ++v) {
    if (t1.is_leaf(v)) leaves1.push_back(v);
  }
  for (NodeId v = 0; v < t2.node_count; ++v) {
    if (t2.is_leaf(v)) leaves2.push_back(v);
  }
  if (leaves1.size() != leaves2.size()) {
    throw std::invalid_argument("assign_label_bijection: leaf counts differ");
  }
  // Fisher-Yates on the second tree's leaves.
  for (std::size_t i = leaves2.size(); i > 1; --i) {
    std::swap(leaves2[i - 1], leaves2[rng.below(i)]);
  }
  for (std::size_t i = 0; i < leaves1.size(); ++i) {
    Label label = static_cast<Label>(i + 1);
    t1.leaf_label[leaves1[i]] = label;
    t2.leaf_label[leaves2[i]] = label;
  }
}

TreePair random_pair(Rng& rng, NodeId n) {
  WeightedLabelledTree t1 = random_recursive_tree(rng, n);
  NodeId want = t1.leaf_count();
  WeightedLabelledTree t2 = random_recursive_tree(rng, n);
  for (int attempt = 0; t2.leaf_count() != want && attempt < 10000; ++attempt) {
    t2 = random_recursive_tree(rng, n);
  }
  if (t2.leaf_count() != want) {
    // Leaf counts of recursive trees concentrate around n/2; at the sizes the
    // harness generates a match always arrives well before the cap.
    throw std::runtime_error("random_pair: could not match leaf counts");
  }
  assign_label_bijection(rng, t1, t2);
  return TreePair::make(std::move(t1), std::move(t2));
}

}  // namespace hia
