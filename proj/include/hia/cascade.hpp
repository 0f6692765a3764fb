#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hia/decomposition.hpp"
#include "hia/types.hpp"

namespace hia {

// Degree-reduced form of a BranchTree. Branch nodes with more than
// `threshold` heavy-tree children are rewired through interval nodes so that
// every node keeps O(log n) degree while root-down paths stay short. The
// first branch-tree-node-count ids mirror the branch tree one-to-one;
// interval nodes are appended after them.
struct GadgetTree {
  enum class Kind : std::uint8_t { kHeavyTree, kBranch, kInterval };

  int threshold = 2;
  std::int32_t root = 0;
  std::vector<Kind> kind;
  std::vector<std::int32_t> parent;
  std::vector<std::vector<std::int32_t>> children;
  std::vector<std::int32_t> source;  // branch-tree node id, -1 for intervals

  std::int32_t branch_tree_nodes = 0;  // ids below this mirror the branch tree
  // Per heavy tree: the gadget path from the parent branch's node down to the
  // heavy tree's node, both inclusive; empty for the root heavy tree.
  std::vector<std::vector<std::int32_t>> ht_parent_chain;

  std::int32_t node_count() const { return static_cast<std::int32_t>(kind.size()); }
  std::int32_t gnode_of(std::int32_t branch_tree_node) const { return branch_tree_node; }
  int depth() const;
  int max_degree() const;           // children + parent edge
  int max_interval_chain() const;   // longest run of consecutive interval nodes
};

GadgetTree build_gadget_tree(const BranchTree& bt, std::int64_t n);

// Expansion of a root-down branch-tree path: a gadget path containing the
// input nodes, in order, as a subsequence.
std::vector<std::int32_t> expand_path(const GadgetTree& gt,
                                      std::span<const std::int32_t> branch_tree_path);

// Lazily materialized Cartesian product of the two gadget trees: only the
// nodes a query walk can visit exist. The shape is shared by the X and Y
// cascade sides.
struct CatalogGraph {
  struct Node {
    std::int32_t g1;
    std::int32_t g2;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::int32_t>> adj;
  std::unordered_map<std::uint64_t, std::int32_t> index;

  static std::uint64_t key(std::int32_t g1, std::int32_t g2) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g1)) << 32) |
           static_cast<std::uint32_t>(g2);
  }
  std::int32_t find(std::int32_t g1, std::int32_t g2) const {
    auto it = index.find(key(g1, g2));
    return it == index.end() ? -1 : it->second;
  }
  std::int32_t add(std::int32_t g1, std::int32_t g2);
  std::size_t size() const { return nodes.size(); }
};

// One cascading overlay: original catalogs, augmented catalogs, per-edge
// bridge maps and the augmented-to-original projection.
struct CascadeSide {
  std::vector<std::vector<std::uint32_t>> orig;
  std::vector<std::vector<std::uint32_t>> aug;
  // orig_ptr[v][i]: predecessor index of aug[v][i] in orig[v], or -1.
  std::vector<std::vector<std::int32_t>> orig_ptr;
  // bridge[v][slot][i]: predecessor index of aug[v][i] in aug[neighbor], where
  // neighbor = graph.adj[v][slot]; -1 when no such element.
  std::vector<std::vector<std::vector<std::int32_t>>> bridge;
  std::uint64_t total_original = 0;
  std::uint64_t total_augmented = 0;
};

CascadeSide build_cascade(const CatalogGraph& graph,
                          std::vector<std::vector<std::uint32_t>> catalogs);

// Stateful walk over the catalog graph answering, at every visited node, the
// predecessor of one fixed key in that node's original catalog. The first
// visit pays a binary search; each move to a neighbour follows a bridge and
// gallops within a short window.
struct CascadeCursor {
  const CatalogGraph* graph = nullptr;
  const CascadeSide* side = nullptr;
  std::uint32_t key = 0;
  std::int32_t node = -1;
  std::int32_t pos = -1;  // predecessor index in aug[node]
  long comparisons = 0;
  long hops = 0;

  void start(const CatalogGraph& g, const CascadeSide& s, std::int32_t at,
             std::uint32_t k);
  void step(std::int32_t neighbor);  // throws if not adjacent to `node`
  // Predecessor rank of the key in the current node's original catalog.
  std::optional<std::size_t> original_position() const;
};

}  // namespace hia
