#include "hia/staircase.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hia {

PairDictionary collect_relevant_pairs(const TreePair& pair, const SideContext& s1,
                                      const SideContext& s2) {
  PairDictionary dict;
  for (Label label : pair.shared_labels) {
    NodeId l1 = pair.leaf_of_label1.at(label);
    NodeId l2 = pair.leaf_of_label2.at(label);
    auto seq1 = heavy_tree_sequence(*s1.tree, *s1.decomposition, l1);
    auto seq2 = heavy_tree_sequence(*s2.tree, *s2.decomposition, l2);
    for (const PathEntry& a : seq1) {
      for (const PathEntry& b : seq2) {
        dict.insert(a.heavy_tree, b.heavy_tree);
      }
    }
  }
  dict.finalize();
  return dict;
}

void add_label(const SideContext& s1, const SideContext& s2, NodeId l1, NodeId l2,
               PointSink& sink) {
  if (s1.tree->leaf_label[l1] != s2.tree->leaf_label[l2]) {
    throw std::invalid_argument("add_label: leaves carry different labels");
  }
  const Decomposition& d1 = *s1.decomposition;
  const Decomposition& d2 = *s2.decomposition;
  auto seq1 = heavy_tree_sequence(*s1.tree, d1, l1);
  auto seq2 = heavy_tree_sequence(*s2.tree, d2, l2);

  // The point coordinate for a branch depends on the leaf only, so hoist the
  // LCA per branch out of the cross loop.
  struct BranchPoint {
    std::int32_t branch;
    std::uint32_t pre;
  };
  std::vector<BranchPoint> left, right;
  for (const PathEntry& a : seq1) {
    for (std::int32_t e1 : d1.heavy_tree_branches[a.heavy_tree]) {
      NodeId w1 = s1.lca->lca(l1, d1.branch_bottom[e1]);
      // w1 sits in the branch's heavy tree, above the branch bottom.
      assert(d1.heavy_tree_id[w1] == a.heavy_tree);
      assert(d1.is_weak_ancestor(w1, d1.branch_bottom[e1]));
      left.push_back({e1, d1.canonical_pre[w1]});
    }
  }
  for (const PathEntry& b : seq2) {
    for (std::int32_t e2 : d2.heavy_tree_branches[b.heavy_tree]) {
      NodeId w2 = s2.lca->lca(l2, d2.branch_bottom[e2]);
      assert(d2.heavy_tree_id[w2] == b.heavy_tree);
      assert(d2.is_weak_ancestor(w2, d2.branch_bottom[e2]));
      right.push_back({e2, d2.canonical_pre[w2]});
    }
  }
  for (const BranchPoint& a : left) {
    for (const BranchPoint& b : right) {
      sink.by_branch_pair[PointSink::key(a.branch, b.branch)].points.emplace_back(
          a.pre, b.pre);
      ++sink.emitted;
    }
  }
}

Staircase postprocess(const RawPoints& raw, const std::vector<Weight>& w1_by_pre,
                      const std::vector<Weight>& w2_by_pre) {
  auto points = raw.points;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Right-to-left sweep in x order: a point survives iff its y exceeds every
  // y seen to its right (ties in x keep only the largest y, which the sweep
  // handles since equal x's are adjacent).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
  std::uint32_t best_y = 0;
  bool any = false;
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    if (!any || it->second > best_y) {
      kept.push_back(*it);
      best_y = it->second;
      any = true;
    }
  }
  std::reverse(kept.begin(), kept.end());

  Staircase st;
  st.xs.reserve(kept.size());
  st.ys.reserve(kept.size());
  std::vector<Weight> combined;
  combined.reserve(kept.size());
  for (const auto& [x, y] : kept) {
    st.xs.push_back(x);
    st.ys.push_back(y);
    combined.push_back(w1_by_pre[x] + w2_by_pre[y]);
  }
  st.dx = PredecessorList::build(st.xs);
  std::vector<std::uint32_t> ys_sorted(st.ys.rbegin(), st.ys.rend());
  st.dy = PredecessorList::build(std::move(ys_sorted));
  st.weight_rmq = RmqMax::build(std::move(combined));
  return st;
}

std::size_t beta_from_rank_x(const Staircase& st, std::optional<std::size_t> rank,
                             std::uint32_t pre_x1, long* comparisons) {
  if (!rank) return 0;
  if (comparisons) ++*comparisons;
  return st.xs[*rank] >= pre_x1 ? *rank : *rank + 1;
}

std::size_t beta_from_rank_y(const Staircase& st, std::optional<std::size_t> rank,
                             std::uint32_t pre_x2, long* comparisons) {
  if (!rank) return 0;
  if (comparisons) ++*comparisons;
  return st.dy.values[*rank] >= pre_x2 ? *rank : *rank + 1;
}

std::size_t split_x(const Staircase& st, std::uint32_t pre_v1, std::uint32_t pre_x1,
                    long* comparisons) {
  auto hit = st.dx.predecessor(pre_v1, comparisons);
  std::optional<std::size_t> rank;
  if (hit) rank = hit->rank;
  return beta_from_rank_x(st, rank, pre_x1, comparisons);
}

std::size_t split_y(const Staircase& st, std::uint32_t pre_v2, std::uint32_t pre_x2,
                    long* comparisons) {
  auto hit = st.dy.predecessor(pre_v2, comparisons);
  std::optional<std::size_t> rank;
  if (hit) rank = hit->rank;
  return beta_from_rank_y(st, rank, pre_x2, comparisons);
}

std::optional<PairAnswer> restricted_hia(const Staircase& st, NodeId x1, NodeId x2,
                                         std::size_t beta_x, std::size_t beta_y,
                                         const TreesView& view, unsigned case_mask) {
  const std::size_t m = st.size();
  if (m == 0) return std::nullopt;
  // Points with y >= pre(x2) form the x-prefix [0, q); y < pre(x2) the suffix.
  const std::size_t q = m - beta_y;

  std::optional<PairAnswer> best;
  auto offer = [&](NodeId u1, NodeId u2, Weight total) {
    if (!best || total > best->total) best = PairAnswer{u1, u2, total};
  };

  // Case 1: both coordinates strictly above the anchors -> RMQ pair.
  if ((case_mask & 1u) && q < beta_x) {
    auto r = st.weight_rmq.range_max(q, beta_x - 1);
    offer((*view.pre_to_node1)[st.xs[r.index]], (*view.pre_to_node2)[st.ys[r.index]],
          r.value);
  }
  // Case 2: above x1, below x2 -> rightmost point of the prefix intersection.
  if (case_mask & 2u) {
    std::size_t end = std::min(beta_x, q);
    if (end > 0) {
      std::size_t idx = end - 1;
      offer((*view.pre_to_node1)[st.xs[idx]], x2,
            (*view.w1_by_pre)[st.xs[idx]] + (*view.w2_by_node)[x2]);
    }
  }
  // Case 3: below x1, above x2 -> leftmost point of the suffix intersection.
  if (case_mask & 4u) {
    std::size_t begin = std::max(beta_x, q);
    if (begin < m) {
      offer(x1, (*view.pre_to_node2)[st.ys[begin]],
            (*view.w1_by_node)[x1] + (*view.w2_by_pre)[st.ys[begin]]);
    }
  }
  // Case 4: below both anchors -> the anchors themselves, if witnessed.
  if ((case_mask & 8u) && beta_x < q) {
    offer(x1, x2, (*view.w1_by_node)[x1] + (*view.w2_by_node)[x2]);
  }
  return best;
}

}  // namespace hia
