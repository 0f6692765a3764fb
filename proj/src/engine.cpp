#include "hia/engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace hia {

int default_b(std::int64_t n) {
  int log_n = n > 1 ? std::bit_width(static_cast<std::uint64_t>(n)) - 1 : 0;
  return std::max(2, log_n);
}

TreesView HiaIndex::view() const {
  return TreesView{&d1.pre_to_node, &d2.pre_to_node, &w1_by_pre, &w2_by_pre,
                   &pair.t1.weight, &pair.t2.weight};
}

const Staircase* HiaIndex::staircase(std::int32_t e1, std::int32_t e2) const {
  auto it = staircases.find(PointSink::key(e1, e2));
  return it == staircases.end() ? nullptr : &it->second;
}

namespace {

std::vector<Weight> weights_by_pre(const WeightedLabelledTree& tree,
                                   const Decomposition& d) {
  std::vector<Weight> w(tree.node_count);
  for (NodeId v = 0; v < tree.node_count; ++v) w[d.canonical_pre[v]] = tree.weight[v];
  return w;
}

// Materializes the product nodes a query walk can visit: for every relevant
// heavy-tree pair, all of its branch pairs plus the gadget chains of each
// side's parent edge crossed with the other side's branches.
CatalogGraph materialize_product(const HiaIndex& index) {
  CatalogGraph g;
  const Decomposition& d1 = index.d1;
  const Decomposition& d2 = index.d2;
  for (std::uint64_t key : index.relevant.keys_sorted) {
    std::int32_t h1 = static_cast<std::int32_t>(key >> 32);
    std::int32_t h2 = static_cast<std::int32_t>(key & 0xffffffffu);
    const auto& branches1 = d1.heavy_tree_branches[h1];
    const auto& branches2 = d2.heavy_tree_branches[h2];
    for (std::int32_t e1 : branches1) {
      std::int32_t g1 = index.gt1.gnode_of(index.bt1.branch_node(e1));
      for (std::int32_t e2 : branches2) {
        g.add(g1, index.gt2.gnode_of(index.bt2.branch_node(e2)));
      }
    }
    const auto& chain1 = index.gt1.ht_parent_chain[h1];
    for (std::int32_t z : chain1) {
      for (std::int32_t e2 : branches2) {
        g.add(z, index.gt2.gnode_of(index.bt2.branch_node(e2)));
      }
    }
    const auto& chain2 = index.gt2.ht_parent_chain[h2];
    for (std::int32_t e1 : branches1) {
      std::int32_t g1 = index.gt1.gnode_of(index.bt1.branch_node(e1));
      for (std::int32_t z : chain2) {
        g.add(g1, z);
      }
    }
  }

  // Adjacency by the Cartesian rule, restricted to materialized nodes.
  auto gadget_neighbors = [](const GadgetTree& gt, std::int32_t u,
                             std::vector<std::int32_t>& out) {
    out.clear();
    if (gt.parent[u] != kNoNode) out.push_back(gt.parent[u]);
    out.insert(out.end(), gt.children[u].begin(), gt.children[u].end());
  };
  std::vector<std::int32_t> tmp;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [g1, g2] = g.nodes[v];
    gadget_neighbors(index.gt1, g1, tmp);
    for (std::int32_t a : tmp) {
      std::int32_t other = g.find(a, g2);
      if (other >= 0) g.adj[v].push_back(other);
    }
    gadget_neighbors(index.gt2, g2, tmp);
    for (std::int32_t b : tmp) {
      std::int32_t other = g.find(g1, b);
      if (other >= 0) g.adj[v].push_back(other);
    }
  }
  return g;
}

}  // namespace

HiaIndex build_index(TreePair pair, int b) {
  auto start = std::chrono::steady_clock::now();
  for (const WeightedLabelledTree* t : {&pair.t1, &pair.t2}) {
    ValidationReport report = validate(*t);
    if (!report.ok()) {
      throw std::invalid_argument("build_index: invalid tree: " +
                                  report.violations.front().message);
    }
  }
  const std::int64_t n = std::max(pair.t1.node_count, pair.t2.node_count);
  if (b == 0) b = default_b(n);
  if (b < 2) throw std::invalid_argument("build_index: b must be >= 2");

  HiaIndex index;
  index.pair = std::move(pair);
  index.d1 = decompose(index.pair.t1, b);
  index.d2 = decompose(index.pair.t2, b);
  index.lca1 = LcaStructure::build(index.pair.t1);
  index.lca2 = LcaStructure::build(index.pair.t2);
  index.w1_by_pre = weights_by_pre(index.pair.t1, index.d1);
  index.w2_by_pre = weights_by_pre(index.pair.t2, index.d2);

  SideContext s1{&index.pair.t1, &index.d1, &index.lca1};
  SideContext s2{&index.pair.t2, &index.d2, &index.lca2};
  index.relevant = collect_relevant_pairs(index.pair, s1, s2);

  PointSink sink;
  for (Label label : index.pair.shared_labels) {
    add_label(s1, s2, index.pair.leaf_of_label1.at(label),
              index.pair.leaf_of_label2.at(label), sink);
  }
  for (auto& [key, raw] : sink.by_branch_pair) {
    index.staircases.emplace(key, postprocess(raw, index.w1_by_pre, index.w2_by_pre));
  }
  index.stats.points_emitted = sink.emitted;
  for (const auto& [key, st] : index.staircases) {
    index.stats.points_retained += st.size();
  }
  index.stats.staircases = index.staircases.size();
  {
    std::uint64_t layers = 0;
    std::int64_t acc = 1;
    while (acc <= n / b) {
      acc *= b;
      ++layers;
    }
    ++layers;  // floor(log_b n) + 1
    std::uint64_t per_tree = layers * (2 * static_cast<std::uint64_t>(b) - 1);
    index.stats.points_bound = static_cast<std::uint64_t>(n) * per_tree * per_tree;
  }

  index.bt1 = build_branch_tree(index.pair.t1, index.d1);
  index.bt2 = build_branch_tree(index.pair.t2, index.d2);
  index.gt1 = build_gadget_tree(index.bt1, index.pair.t1.node_count);
  index.gt2 = build_gadget_tree(index.bt2, index.pair.t2.node_count);
  index.product = materialize_product(index);
  index.stats.product_nodes = index.product.size();

  std::vector<std::vector<std::uint32_t>> catalogs_x(index.product.size());
  std::vector<std::vector<std::uint32_t>> catalogs_y(index.product.size());
  for (const auto& [key, st] : index.staircases) {
    std::int32_t e1 = static_cast<std::int32_t>(key >> 32);
    std::int32_t e2 = static_cast<std::int32_t>(key & 0xffffffffu);
    std::int32_t node = index.product.find(index.gt1.gnode_of(index.bt1.branch_node(e1)),
                                           index.gt2.gnode_of(index.bt2.branch_node(e2)));
    if (node >= 0) {
      catalogs_x[node] = st.dx.values;
      catalogs_y[node] = st.dy.values;
    }
  }
  index.cascade_x = build_cascade(index.product, std::move(catalogs_x));
  index.cascade_y = build_cascade(index.product, std::move(catalogs_y));
  index.stats.augmented_x = index.cascade_x.total_augmented;
  index.stats.augmented_y = index.cascade_y.total_augmented;

  index.stats.build_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return index;
}

namespace {

// Runs the two-pointer driver without any predecessor work: the pointer moves
// depend only on the relevant-pair dictionary, so the full trace is known
// before any staircase is opened.
std::vector<TraceEntry> build_trace(const HiaIndex& index, NodeId v1, NodeId v2) {
  auto seq1 = heavy_tree_sequence(index.pair.t1, index.d1, v1);
  auto seq2 = heavy_tree_sequence(index.pair.t2, index.d2, v2);
  std::vector<TraceEntry> trace;
  int i = 0;
  int j = static_cast<int>(seq2.size()) - 1;
  const int last1 = static_cast<int>(seq1.size()) - 1;
  while (true) {
    TraceEntry entry;
    entry.i = i;
    entry.j = j;
    entry.heavy_tree1 = seq1[i].heavy_tree;
    entry.heavy_tree2 = seq2[j].heavy_tree;
    entry.x1 = seq1[i].anchor;
    entry.x2 = seq2[j].anchor;
    entry.branch1 = index.d1.branch_id[entry.x1];
    entry.branch2 = index.d2.branch_id[entry.x2];
    entry.relevant = index.relevant.contains(entry.heavy_tree1, entry.heavy_tree2);
    trace.push_back(entry);

    if (i == last1 && j == 0) break;
    if (i < last1 &&
        index.relevant.contains(seq1[i + 1].heavy_tree, seq2[j].heavy_tree)) {
      ++i;
    } else if (j > 0) {
      --j;
    } else {
      // No shared label below the next heavy tree on the v1 path; every
      // remaining pair is irrelevant. Only reachable without a label
      // bijection.
      break;
    }
  }
  return trace;
}

std::optional<PairAnswer> run_independent(const HiaIndex& index, NodeId v1, NodeId v2,
                                          std::vector<TraceEntry>& trace,
                                          QueryStats* stats) {
  const std::uint32_t pre_v1 = index.d1.canonical_pre[v1];
  const std::uint32_t pre_v2 = index.d2.canonical_pre[v2];
  TreesView view = index.view();
  std::optional<PairAnswer> best;
  long comparisons = 0;
  for (TraceEntry& entry : trace) {
    const Staircase* st = index.staircase(entry.branch1, entry.branch2);
    if (st == nullptr) continue;
    entry.beta_x = split_x(*st, pre_v1, index.d1.canonical_pre[entry.x1], &comparisons);
    entry.beta_y = split_y(*st, pre_v2, index.d2.canonical_pre[entry.x2], &comparisons);
    entry.answer =
        restricted_hia(*st, entry.x1, entry.x2, entry.beta_x, entry.beta_y, view);
    if (entry.answer && (!best || entry.answer->total > best->total)) {
      best = entry.answer;
    }
  }
  if (stats) stats->comparisons += comparisons;
  return best;
}

std::optional<PairAnswer> run_cascading(const HiaIndex& index, NodeId v1, NodeId v2,
                                        std::vector<TraceEntry>& trace,
                                        QueryStats* stats) {
  const std::uint32_t pre_v1 = index.d1.canonical_pre[v1];
  const std::uint32_t pre_v2 = index.d2.canonical_pre[v2];
  TreesView view = index.view();
  std::optional<PairAnswer> best;
  CascadeCursor cx, cy;
  bool started = false;
  bool broken = false;
  const TraceEntry* prev = nullptr;
  int reseeds = 0;

  auto walk_to = [&](const TraceEntry& entry) {
    // Product path from the previous branch pair: the changed coordinate
    // moves through the stored gadget chain, the other one stays put.
    std::int32_t g1 = index.gt1.gnode_of(index.bt1.branch_node(entry.branch1));
    std::int32_t g2 = index.gt2.gnode_of(index.bt2.branch_node(entry.branch2));
    if (entry.i == prev->i + 1) {
      // Down the v1 path into heavy tree B1[i]: parent chain ends here.
      const auto& chain = index.gt1.ht_parent_chain[entry.heavy_tree1];
      std::int32_t g2_prev = index.gt2.gnode_of(index.bt2.branch_node(prev->branch2));
      for (std::size_t k = 1; k < chain.size(); ++k) {
        std::int32_t node = index.product.find(chain[k], g2_prev);
        cx.step(node);
        cy.step(node);
      }
      std::int32_t target = index.product.find(g1, g2_prev);
      cx.step(target);
      cy.step(target);
    } else {
      // Up the v2 path out of heavy tree B2[j_prev], against its parent chain.
      const auto& chain = index.gt2.ht_parent_chain[prev->heavy_tree2];
      std::int32_t g1_prev = index.gt1.gnode_of(index.bt1.branch_node(prev->branch1));
      std::int32_t ht_node = index.product.find(g1_prev, chain.back());
      cx.step(ht_node);
      cy.step(ht_node);
      for (std::size_t k = chain.size() - 1; k-- > 0;) {
        std::int32_t node = index.product.find(g1_prev, chain[k]);
        cx.step(node);
        cy.step(node);
      }
    }
    (void)g2;
  };

  for (TraceEntry& entry : trace) {
    const Staircase* st = index.staircase(entry.branch1, entry.branch2);
    if (st == nullptr) {
      broken = true;
      prev = &entry;
      continue;
    }
    std::int32_t node = index.product.find(
        index.gt1.gnode_of(index.bt1.branch_node(entry.branch1)),
        index.gt2.gnode_of(index.bt2.branch_node(entry.branch2)));
    if (!started || broken) {
      if (started) ++reseeds;
      cx.start(index.product, index.cascade_x, node, pre_v1);
      cy.start(index.product, index.cascade_y, node, pre_v2);
      started = true;
      broken = false;
    } else {
      walk_to(entry);
    }
    long adjust = 0;
    entry.beta_x = beta_from_rank_x(*st, cx.original_position(),
                                    index.d1.canonical_pre[entry.x1], &adjust);
    entry.beta_y = beta_from_rank_y(*st, cy.original_position(),
                                    index.d2.canonical_pre[entry.x2], &adjust);
    cx.comparisons += adjust;
    entry.answer =
        restricted_hia(*st, entry.x1, entry.x2, entry.beta_x, entry.beta_y, view);
    if (entry.answer && (!best || entry.answer->total > best->total)) {
      best = entry.answer;
    }
    prev = &entry;
  }
  if (stats) {
    stats->comparisons += cx.comparisons + cy.comparisons;
    stats->bridge_hops += cx.hops + cy.hops;
    stats->reseeds += reseeds;
  }
  return best;
}

}  // namespace

std::optional<PairAnswer> hia_query(const HiaIndex& index, NodeId v1, NodeId v2,
                                    Engine engine, QueryStats* stats,
                                    std::vector<TraceEntry>* trace_out) {
  if (v1 < 0 || v1 >= index.pair.t1.node_count || v2 < 0 ||
      v2 >= index.pair.t2.node_count) {
    throw std::invalid_argument("hia_query: node id out of range");
  }
  std::vector<TraceEntry> trace = build_trace(index, v1, v2);
  if (stats) {
    stats->trace_length += static_cast<int>(trace.size());
    stats->restricted_queries += static_cast<int>(trace.size());
  }
  std::optional<PairAnswer> best;
  if (engine == Engine::kIndependent) {
    best = run_independent(index, v1, v2, trace, stats);
  } else {
    best = run_cascading(index, v1, v2, trace, stats);
  }
  if (trace_out) *trace_out = std::move(trace);
  return best;
}

std::vector<TraceEntry> query_trace(const HiaIndex& index, NodeId v1, NodeId v2) {
  std::vector<TraceEntry> trace;
  hia_query(index, v1, v2, Engine::kIndependent, nullptr, &trace);
  return trace;
}

}  // namespace hia
