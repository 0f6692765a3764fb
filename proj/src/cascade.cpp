#include "hia/cascade.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace hia {

namespace {

// Subtree sizes over the branch tree (both node kinds count 1 each).
std::vector<std::int64_t> branch_tree_sizes(const BranchTree& bt) {
  std::vector<std::int64_t> s(bt.node_count(), 1);
  std::vector<std::int32_t> order;
  order.reserve(bt.node_count());
  std::vector<std::int32_t> stack = {bt.root};
  while (!stack.empty()) {
    std::int32_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (std::int32_t c : bt.children[u]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (bt.parent[*it] != kNoNode) s[bt.parent[*it]] += s[*it];
  }
  return s;
}

struct GadgetBuilder {
  GadgetTree gt;
  std::vector<std::int64_t> gsize;  // per gadget node

  std::int32_t new_interval(std::int64_t size) {
    std::int32_t id = gt.node_count();
    gt.kind.push_back(GadgetTree::Kind::kInterval);
    gt.parent.push_back(kNoNode);
    gt.children.emplace_back();
    gt.source.push_back(-1);
    gsize.push_back(size);
    return id;
  }

  void attach(std::int32_t parent, std::int32_t child) {
    gt.parent[child] = parent;
    gt.children[parent].push_back(child);
  }

  // Hangs `kids` under `node`, inserting interval nodes whenever the fan-out
  // exceeds the threshold. Prefix sums of subtree sizes decide which children
  // are marked and attach directly; runs of unmarked children are wrapped.
  void place_children(std::int32_t node, const std::vector<std::int32_t>& kids) {
    const std::int64_t t = gt.threshold;
    if (static_cast<std::int64_t>(kids.size()) <= t) {
      for (std::int32_t k : kids) attach(node, k);
      return;
    }
    const std::int64_t total = gsize[node];
    std::vector<char> marked(kids.size(), 0);
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      std::int64_t lo = prefix;  // s_{i-1}
      prefix += gsize[kids[i]];  // s_i
      // Exists an integer l with lo * t < l * total <= prefix * t ?
      std::int64_t l = (prefix * t) / total;
      if (l >= 1 && l * total > lo * t) marked[i] = 1;
    }
    std::vector<std::int32_t> run;
    std::int64_t run_size = 0;
    auto flush = [&]() {
      if (run.empty()) return;
      if (run.size() == 1) {
        attach(node, run[0]);
      } else {
        std::int32_t iv = new_interval(run_size);
        attach(node, iv);
        place_children(iv, run);
      }
      run.clear();
      run_size = 0;
    };
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (marked[i]) {
        flush();
        attach(node, kids[i]);
      } else {
        run.push_back(kids[i]);
        run_size += gsize[kids[i]];
      }
    }
    flush();
  }
};

}  // namespace

GadgetTree build_gadget_tree(const BranchTree& bt, std::int64_t n) {
  GadgetBuilder b;
  int log_n = n > 1 ? std::bit_width(static_cast<std::uint64_t>(n)) - 1 : 0;
  b.gt.threshold = std::max(2, log_n);
  b.gt.branch_tree_nodes = bt.node_count();
  b.gt.root = bt.root;

  auto sizes = branch_tree_sizes(bt);
  b.gt.kind.resize(bt.node_count());
  b.gt.parent.assign(bt.node_count(), kNoNode);
  b.gt.children.assign(bt.node_count(), {});
  b.gt.source.resize(bt.node_count());
  b.gsize = sizes;
  for (std::int32_t u = 0; u < bt.node_count(); ++u) {
    b.gt.kind[u] = bt.is_branch_node(u) ? GadgetTree::Kind::kBranch
                                        : GadgetTree::Kind::kHeavyTree;
    b.gt.source[u] = u;
  }
  // Only branch nodes can exceed the threshold; heavy-tree nodes have O(b)
  // branch children and are copied verbatim either way.
  for (std::int32_t u = 0; u < bt.node_count(); ++u) {
    b.place_children(u, bt.children[u]);
  }

  // Parent chains: climb from each heavy-tree node to its branch parent.
  b.gt.ht_parent_chain.assign(bt.ht_count, {});
  for (std::int32_t ht = 0; ht < bt.ht_count; ++ht) {
    std::int32_t g = bt.ht_node(ht);
    if (bt.parent[g] == kNoNode) continue;  // root heavy tree
    std::vector<std::int32_t> chain = {g};
    std::int32_t cur = b.gt.parent[g];
    while (b.gt.kind[cur] == GadgetTree::Kind::kInterval) {
      chain.push_back(cur);
      cur = b.gt.parent[cur];
    }
    chain.push_back(cur);  // the branch node
    std::reverse(chain.begin(), chain.end());
    b.gt.ht_parent_chain[ht] = std::move(chain);
  }
  return b.gt;
}

int GadgetTree::depth() const {
  std::vector<int> depth(node_count(), 0);
  std::vector<std::int32_t> queue = {root};
  int best = 0;
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

int GadgetTree::max_degree() const {
  int best = 0;
  for (std::int32_t u = 0; u < node_count(); ++u) {
    int deg = static_cast<int>(children[u].size()) + (parent[u] != kNoNode ? 1 : 0);
    best = std::max(best, deg);
  }
  return best;
}

int GadgetTree::max_interval_chain() const {
  std::vector<int> chain(node_count(), 0);
  std::vector<std::int32_t> queue = {root};
  int best = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::int32_t u = queue[head];
    if (kind[u] == Kind::kInterval) {
      std::int32_t p = parent[u];
      chain[u] = 1 + (p != kNoNode && kind[p] == Kind::kInterval ? chain[p] : 0);
      best = std::max(best, chain[u]);
    }
    for (std::int32_t c : children[u]) queue.push_back(c);
  }
  return best;
}

std::vector<std::int32_t> expand_path(const GadgetTree& gt,
                                      std::span<const std::int32_t> branch_tree_path) {
  std::vector<std::int32_t> out;
  if (branch_tree_path.empty()) return out;
  out.push_back(gt.gnode_of(branch_tree_path[0]));
  for (std::size_t i = 1; i < branch_tree_path.size(); ++i) {
    std::int32_t child = gt.gnode_of(branch_tree_path[i]);
    // Collect the gadget nodes strictly between the branch-tree parent and
    // child: interval nodes only, possibly none.
    std::vector<std::int32_t> between;
    std::int32_t cur = gt.parent[child];
    while (cur != kNoNode && gt.kind[cur] == GadgetTree::Kind::kInterval) {
      between.push_back(cur);
      cur = gt.parent[cur];
    }
    if (cur != gt.gnode_of(branch_tree_path[i - 1])) {
      throw std::invalid_argument("expand_path: input is not a root-down path");
    }
    for (auto it = between.rbegin(); it != between.rend(); ++it) out.push_back(*it);
    out.push_back(child);
  }
  return out;
}

std::int32_t CatalogGraph::add(std::int32_t g1, std::int32_t g2) {
  auto [it, inserted] = index.try_emplace(key(g1, g2), static_cast<std::int32_t>(nodes.size()));
  if (inserted) {
    nodes.push_back({g1, g2});
    adj.emplace_back();
  }
  return it->second;
}

CascadeSide build_cascade(const CatalogGraph& graph,
                          std::vector<std::vector<std::uint32_t>> catalogs) {
  const std::size_t n = graph.size();
  CascadeSide side;
  side.orig = std::move(catalogs);
  side.orig.resize(n);
  for (auto& c : side.orig) {
    assert(std::is_sorted(c.begin(), c.end()));
    side.total_original += c.size();
  }

  // Every node forwards each (2*deg)-th element of its augmented catalog to
  // each neighbour. Iterate until the catalogs stop changing; sizes are
  // monotone and globally bounded by twice the original total, so the loop
  // terminates. A few extra value rounds settle contents after sizes do.
  std::vector<std::size_t> stride(n);
  for (std::size_t v = 0; v < n; ++v) {
    stride[v] = 2 * std::max<std::size_t>(1, graph.adj[v].size());
  }
  side.aug = side.orig;
  std::vector<std::vector<std::uint32_t>> next(n);
  for (int round = 0; round < 200; ++round) {
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      auto& out = next[v];
      out = side.orig[v];
      for (std::int32_t u : graph.adj[v]) {
        const auto& a = side.aug[u];
        for (std::size_t i = stride[u] - 1; i < a.size(); i += stride[u]) {
          out.push_back(a[i]);
        }
      }
      std::sort(out.begin(), out.end());
      if (out != side.aug[v]) changed = true;
    }
    side.aug.swap(next);
    if (!changed) break;
  }

  side.total_augmented = 0;
  for (const auto& a : side.aug) side.total_augmented += a.size();

  // Exact predecessor maps: aug -> own original catalog, and aug -> each
  // neighbour's augmented catalog.
  auto predecessor_map = [](const std::vector<std::uint32_t>& from,
                            const std::vector<std::uint32_t>& into) {
    std::vector<std::int32_t> map(from.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      while (j < into.size() && into[j] <= from[i]) ++j;
      map[i] = static_cast<std::int32_t>(j) - 1;
    }
    return map;
  };
  side.orig_ptr.resize(n);
  side.bridge.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    side.orig_ptr[v] = predecessor_map(side.aug[v], side.orig[v]);
    side.bridge[v].resize(graph.adj[v].size());
    for (std::size_t s = 0; s < graph.adj[v].size(); ++s) {
      side.bridge[v][s] = predecessor_map(side.aug[v], side.aug[graph.adj[v][s]]);
    }
  }
  return side;
}

void CascadeCursor::start(const CatalogGraph& g, const CascadeSide& s, std::int32_t at,
                          std::uint32_t k) {
  graph = &g;
  side = &s;
  key = k;
  node = at;
  const auto& a = side->aug[at];
  std::size_t lo = 0, hi = a.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++comparisons;
    if (a[mid] <= key) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  pos = static_cast<std::int32_t>(lo) - 1;
}

void CascadeCursor::step(std::int32_t neighbor) {
  if (node < 0) throw std::logic_error("CascadeCursor::step before start");
  const auto& adj = graph->adj[node];
  std::size_t slot = 0;
  for (; slot < adj.size(); ++slot) {
    if (adj[slot] == neighbor) break;
  }
  if (slot == adj.size()) {
    throw std::invalid_argument("CascadeCursor::step: node is not a neighbour");
  }
  std::int32_t q = pos >= 0 ? side->bridge[node][slot][pos] : -1;
  const auto& a = side->aug[neighbor];
  // Exponential search right of q for the last element <= key; the bridge
  // lands within a short window of the target.
  std::size_t lo = static_cast<std::size_t>(q + 1);
  std::size_t step_size = 1;
  std::size_t hi = lo;
  while (hi < a.size()) {
    ++comparisons;
    if (a[hi] <= key) {
      hi += step_size;
      step_size *= 2;
    } else {
      break;
    }
  }
  hi = std::min(hi, a.size());
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++comparisons;
    if (a[mid] <= key) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  pos = static_cast<std::int32_t>(lo) - 1;
  node = neighbor;
  ++hops;
}

std::optional<std::size_t> CascadeCursor::original_position() const {
  if (pos < 0) return std::nullopt;
  std::int32_t p = side->orig_ptr[node][pos];
  if (p < 0) return std::nullopt;
  return static_cast<std::size_t>(p);
}

}  // namespace hia
