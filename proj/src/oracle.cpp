#include "hia/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace hia {

LabelSets LabelSets::build(const WeightedLabelledTree& tree,
                           const std::vector<Label>& shared_labels) {
  LabelSets s;
  s.words = (shared_labels.size() + 63) / 64;
  if (s.words == 0) s.words = 1;
  s.bits.assign(s.words * tree.node_count, 0);

  std::unordered_map<Label, std::size_t> bit_of;
  for (std::size_t i = 0; i < shared_labels.size(); ++i) bit_of[shared_labels[i]] = i;

  // Bottom-up union over a DFS order.
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
    std::uint64_t* row = s.bits.data() + s.words * v;
    if (tree.is_leaf(v)) {
      auto found = bit_of.find(tree.leaf_label[v]);
      if (found != bit_of.end()) {
        row[found->second / 64] |= std::uint64_t{1} << (found->second % 64);
      }
    }
    if (tree.parent[v] != kNoNode) {
      std::uint64_t* up = s.bits.data() + s.words * tree.parent[v];
      for (std::size_t w = 0; w < s.words; ++w) up[w] |= row[w];
    }
  }
  return s;
}

BruteOracle BruteOracle::build(const TreePair& pair) {
  BruteOracle o;
  o.pair = &pair;
  o.sets1 = LabelSets::build(pair.t1, pair.shared_labels);
  o.sets2 = LabelSets::build(pair.t2, pair.shared_labels);
  return o;
}

bool BruteOracle::induced(NodeId u1, NodeId u2) const {
  const std::uint64_t* a = sets1.row(u1);
  const std::uint64_t* b = sets2.row(u2);
  for (std::size_t w = 0; w < sets1.words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

std::optional<Label> BruteOracle::witness_label(NodeId u1, NodeId u2) const {
  const std::uint64_t* a = sets1.row(u1);
  const std::uint64_t* b = sets2.row(u2);
  for (std::size_t w = 0; w < sets1.words; ++w) {
    std::uint64_t common = a[w] & b[w];
    if (common) {
      std::size_t bit = w * 64 + std::countr_zero(common);
      return pair->shared_labels[bit];
    }
  }
  return std::nullopt;
}

std::optional<PairAnswer> BruteOracle::hia(NodeId v1, NodeId v2) const {
  std::optional<PairAnswer> best;
  for (NodeId a = v1; a != kNoNode; a = pair->t1.parent[a]) {
    for (NodeId b = v2; b != kNoNode; b = pair->t2.parent[b]) {
      if (!induced(a, b)) continue;
      Weight total = pair->t1.weight[a] + pair->t2.weight[b];
      if (!best || total > best->total) best = PairAnswer{a, b, total};
    }
  }
  return best;
}

std::optional<PairAnswer> BruteOracle::restricted_hia(
    NodeId v1, NodeId v2, const Decomposition& d1, const Decomposition& d2,
    std::int32_t ht1, std::int32_t ht2) const {
  std::optional<PairAnswer> best;
  for (NodeId a = v1; a != kNoNode; a = pair->t1.parent[a]) {
    if (d1.heavy_tree_id[a] != ht1) continue;
    for (NodeId b = v2; b != kNoNode; b = pair->t2.parent[b]) {
      if (d2.heavy_tree_id[b] != ht2) continue;
      if (!induced(a, b)) continue;
      Weight total = pair->t1.weight[a] + pair->t2.weight[b];
      if (!best || total > best->total) best = PairAnswer{a, b, total};
    }
  }
  return best;
}

}  // namespace hia
