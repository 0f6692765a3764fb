#include "hia/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hia {

namespace {

// Largest k >= 0 with s * b^k <= n, i.e. the layer of a node of subtree
// size s in a tree of n nodes.
int layer_of(std::int64_t s, std::int64_t n, int b) {
  int k = 0;
  std::int64_t acc = s;
  while (acc <= n / b) {  // acc * b <= n without overflow
    acc *= b;
    ++k;
  }
  return k;
}

}  // namespace

Decomposition decompose(const WeightedLabelledTree& tree, int b) {
  if (b < 2) throw std::invalid_argument("decompose: b must be >= 2");
  Decomposition d;
  d.b = b;
  d.n = tree.node_count;
  d.size = subtree_sizes(tree);

  d.layer.resize(tree.node_count);
  for (NodeId v = 0; v < tree.node_count; ++v) {
    d.layer[v] = layer_of(d.size[v], d.n, b);
  }
  {
    std::vector<char> seen;
    for (NodeId v = 0; v < tree.node_count; ++v) {
      if (static_cast<std::size_t>(d.layer[v]) >= seen.size()) {
        seen.resize(d.layer[v] + 1, 0);
      }
      seen[d.layer[v]] = 1;
    }
    d.distinct_layers = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
  }

  // Heavy trees: DFS, opening a new component at every light entry edge.
  d.heavy_tree_id.assign(tree.node_count, -1);
  std::vector<NodeId> stack = {tree.root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (tree.parent[v] == kNoNode || !d.edge_is_heavy(tree.parent[v], v)) {
      d.heavy_tree_id[v] = static_cast<std::int32_t>(d.heavy_tree_root.size());
      d.heavy_tree_root.push_back(v);
    } else {
      d.heavy_tree_id[v] = d.heavy_tree_id[tree.parent[v]];
    }
    // Reverse push keeps discovery order equal to stored child order.
    for (auto it = tree.children[v].rbegin(); it != tree.children[v].rend(); ++it) {
      stack.push_back(*it);
    }
  }

  // Branches: chains along single heavy children. A node opens a new branch
  // iff it is a heavy-tree root or its parent has >= 2 heavy children.
  std::vector<std::int32_t> heavy_child_count(tree.node_count, 0);
  for (NodeId v = 0; v < tree.node_count; ++v) {
    for (NodeId c : tree.children[v]) {
      if (d.edge_is_heavy(v, c)) ++heavy_child_count[v];
    }
  }
  d.branch_id.assign(tree.node_count, -1);
  d.explicit_flag.resize(tree.node_count);
  d.heavy_tree_branches.assign(d.heavy_tree_root.size(), {});
  stack.push_back(tree.root);
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    bool opens = tree.parent[v] == kNoNode || !d.edge_is_heavy(tree.parent[v], v) ||
                 heavy_child_count[tree.parent[v]] >= 2;
    if (opens) {
      std::int32_t id = static_cast<std::int32_t>(d.branch_top.size());
      d.branch_top.push_back(v);
      d.branch_bottom.push_back(v);
      d.branch_heavy_tree.push_back(d.heavy_tree_id[v]);
      d.heavy_tree_branches[d.heavy_tree_id[v]].push_back(id);
      d.branch_id[v] = id;
    } else {
      d.branch_id[v] = d.branch_id[tree.parent[v]];
      d.branch_bottom[d.branch_id[v]] = v;
    }
    d.explicit_flag[v] = heavy_child_count[v] != 1;
    for (auto it = tree.children[v].rbegin(); it != tree.children[v].rend(); ++it) {
      stack.push_back(*it);
    }
  }

  PreorderMap pre = canonical_preorder(tree, d);
  d.canonical_pre = std::move(pre.pre);
  d.pre_to_node = std::move(pre.node);
  return d;
}

PreorderMap canonical_preorder(const WeightedLabelledTree& tree,
                               const Decomposition& d) {
  PreorderMap map;
  map.pre.resize(tree.node_count);
  map.node.resize(tree.node_count);
  std::uint32_t counter = 0;
  std::vector<NodeId> stack = {tree.root};
  std::vector<NodeId> order;
  order.reserve(8);
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    map.pre[v] = counter;
    map.node[counter] = v;
    ++counter;
    // Visit light children first, then heavy ones; push in reverse.
    order.clear();
    for (NodeId c : tree.children[v]) {
      if (!d.edge_is_heavy(v, c)) order.push_back(c);
    }
    for (NodeId c : tree.children[v]) {
      if (d.edge_is_heavy(v, c)) order.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) stack.push_back(*it);
  }
  return map;
}

std::vector<PathEntry> heavy_tree_sequence(const WeightedLabelledTree& tree,
                                           const Decomposition& d, NodeId v) {
  // Walk heavy trees upward by jumping to the parent of each heavy-tree root.
  std::vector<PathEntry> seq;
  NodeId anchor = v;
  NodeId cur = v;
  while (true) {
    std::int32_t ht = d.heavy_tree_id[cur];
    seq.push_back({ht, anchor});
    NodeId root = d.heavy_tree_root[ht];
    if (tree.parent[root] == kNoNode) break;
    anchor = tree.parent[root];
    cur = anchor;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

int BranchTree::depth() const {
  std::vector<int> depth(node_count(), 0);
  int best = 0;
  // parents always precede children in id order within each kind, but not
  // across kinds; do a BFS from the root instead.
  std::vector<std::int32_t> queue = {root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::int32_t u = queue[head];
    best = std::max(best, depth[u]);
    for (std::int32_t c : children[u]) {
      depth[c] = depth[u] + 1;
      queue.push_back(c);
    }
  }
  return best;
}

BranchTree build_branch_tree(const WeightedLabelledTree& tree,
                             const Decomposition& d) {
  BranchTree bt;
  bt.ht_count = d.heavy_tree_count();
  bt.branch_count = d.branch_count();
  bt.parent.assign(bt.node_count(), kNoNode);
  bt.children.assign(bt.node_count(), {});

  for (std::int32_t ht = 0; ht < bt.ht_count; ++ht) {
    for (std::int32_t br : d.heavy_tree_branches[ht]) {
      bt.parent[bt.branch_node(br)] = bt.ht_node(ht);
      bt.children[bt.ht_node(ht)].push_back(bt.branch_node(br));
    }
    NodeId root = d.heavy_tree_root[ht];
    if (tree.parent[root] == kNoNode) {
      bt.root = bt.ht_node(ht);
    } else {
      std::int32_t up = d.branch_id[tree.parent[root]];
      bt.parent[bt.ht_node(ht)] = bt.branch_node(up);
      bt.children[bt.branch_node(up)].push_back(bt.ht_node(ht));
    }
  }
  return bt;
}

}  // namespace hia
