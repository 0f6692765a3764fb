#include "hia/anchors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hia {

namespace {

// Plain trie assembled by repeated insertion; converted to a
// WeightedLabelledTree with weight = string depth afterwards.
struct TrieBuilder {
  std::vector<std::vector<std::pair<std::int32_t, NodeId>>> steps{1};
  std::vector<Weight> depth{0};
  std::vector<Label> label{kNoLabel};
  std::vector<NodeId> parent{kNoNode};

  NodeId child(NodeId at, std::int32_t symbol) const {
    for (const auto& [s, c] : steps[at]) {
      if (s == symbol) return c;
    }
    return kNoNode;
  }

  NodeId extend(NodeId at, std::int32_t symbol) {
    NodeId c = child(at, symbol);
    if (c != kNoNode) return c;
    c = static_cast<NodeId>(steps.size());
    steps.emplace_back();
    depth.push_back(depth[at] + 1);
    label.push_back(kNoLabel);
    parent.push_back(at);
    steps[at].emplace_back(symbol, c);
    return c;
  }

  // symbols: the anchor's string plus its private sentinel at the end.
  void insert(const std::vector<std::int32_t>& symbols, Label leaf_label) {
    NodeId at = 0;
    for (std::int32_t s : symbols) at = extend(at, s);
    label[at] = leaf_label;
  }

  WeightedLabelledTree to_tree() const {
    WeightedLabelledTree t;
    t.node_count = static_cast<NodeId>(steps.size());
    t.root = 0;
    t.parent = parent;
    t.weight = depth;
    t.leaf_label = label;
    t.children.assign(t.node_count, {});
    for (NodeId v = 0; v < t.node_count; ++v) {
      for (const auto& [s, c] : steps[v]) t.children[v].push_back(c);
    }
    return t;
  }
};

// Any label shared by leaf-descendants of u1 (in t1) and u2 (in t2).
std::optional<Label> shared_descendant_label(const WeightedLabelledTree& t1, NodeId u1,
                                             const WeightedLabelledTree& t2, NodeId u2) {
  std::unordered_set<Label> seen;
  std::vector<NodeId> stack = {u1};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (t1.is_leaf(v)) seen.insert(t1.leaf_label[v]);
    for (NodeId c : t1.children[v]) stack.push_back(c);
  }
  stack.push_back(u2);
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (t2.is_leaf(v) && seen.count(t2.leaf_label[v])) return t2.leaf_label[v];
    for (NodeId c : t2.children[v]) stack.push_back(c);
  }
  return std::nullopt;
}

NodeId walk(const std::vector<std::vector<std::pair<std::int32_t, NodeId>>>& steps,
            const std::string& symbols, bool reversed) {
  NodeId at = 0;
  auto try_step = [&](char ch) {
    std::int32_t symbol = static_cast<unsigned char>(ch);
    for (const auto& [s, c] : steps[at]) {
      if (s == symbol) {
        at = c;
        return true;
      }
    }
    return false;
  };
  if (reversed) {
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) {
      if (!try_step(*it)) break;
    }
  } else {
    for (char ch : symbols) {
      if (!try_step(ch)) break;
    }
  }
  return at;
}

}  // namespace

NodeId AnchoredText::walk_left(const std::string& context) const {
  return walk(steps_left, context, /*reversed=*/true);
}

NodeId AnchoredText::walk_right(const std::string& context) const {
  return walk(steps_right, context, /*reversed=*/false);
}

AnchoredText build_anchored(const std::string& text,
                            std::vector<std::int32_t> anchors, int b) {
  if (anchors.empty()) {
    throw std::invalid_argument("build_anchored: anchor set is empty");
  }
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  for (std::int32_t k : anchors) {
    if (k < 2 || static_cast<std::size_t>(k) > text.size()) {
      throw std::invalid_argument("build_anchored: anchor " + std::to_string(k) +
                                  " outside [2, |text|]");
    }
  }

  TrieBuilder left, right;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const std::int32_t k = anchors[i];
    const std::int32_t sentinel = 256 + static_cast<std::int32_t>(i);
    std::vector<std::int32_t> symbols;
    // Reversed prefix text[1..k-1]: positions k-1 down to 1 (1-indexed).
    for (std::int32_t p = k - 1; p >= 1; --p) {
      symbols.push_back(static_cast<unsigned char>(text[p - 1]));
    }
    symbols.push_back(sentinel);
    left.insert(symbols, k);

    symbols.clear();
    for (std::size_t p = k; p <= text.size(); ++p) {
      symbols.push_back(static_cast<unsigned char>(text[p - 1]));
    }
    symbols.push_back(sentinel);
    right.insert(symbols, k);
  }

  AnchoredText a;
  a.text = text;
  a.anchors = std::move(anchors);
  a.trie_left = left.to_tree();
  a.trie_right = right.to_tree();
  a.steps_left = std::move(left.steps);
  a.steps_right = std::move(right.steps);
  a.index = build_index(TreePair::make(a.trie_left, a.trie_right), b);
  return a;
}

std::optional<CrossingAnswer> longest_crossing(const AnchoredText& anchored,
                                               const std::string& left_context,
                                               const std::string& right_context) {
  NodeId u = anchored.walk_left(left_context);
  NodeId v = anchored.walk_right(right_context);
  auto answer = hia_query(anchored.index, u, v, Engine::kIndependent);
  if (!answer) return std::nullopt;
  auto witness = shared_descendant_label(anchored.index.pair.t1, answer->u1,
                                         anchored.index.pair.t2, answer->u2);
  if (!witness) return std::nullopt;  // unreachable for a non-empty anchor set
  return CrossingAnswer{static_cast<std::size_t>(answer->total),
                        static_cast<std::int32_t>(*witness)};
}

}  // namespace hia
