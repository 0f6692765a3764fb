#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "hia/engine.hpp"
#include "hia/gen.hpp"
#include "hia/oracle.hpp"
#include "hia/staircase.hpp"

using namespace hia;

namespace {

std::vector<Weight> identity_weights(std::size_t n) {
  std::vector<Weight> w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

// O(m^2) dominance filter.
std::vector<std::pair<std::uint32_t, std::uint32_t>> quadratic_filter(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
  for (const auto& p : points) {
    bool dominated = false;
    for (const auto& q : points) {
      if (q != p && p.first <= q.first && p.second <= q.second) dominated = true;
    }
    if (!dominated) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

TEST_CASE("postprocess drops dominated points") {
  RawPoints raw;
  raw.points = {{5, 3}, {4, 7}, {2, 2}};
  auto w = identity_weights(10);
  auto st = postprocess(raw, w, w);
  CHECK(st.xs == std::vector<std::uint32_t>{4, 5});
  CHECK(st.ys == std::vector<std::uint32_t>{7, 3});
}

TEST_CASE("postprocess keeps a single point") {
  RawPoints raw;
  raw.points = {{3, 3}};
  auto w = identity_weights(5);
  auto st = postprocess(raw, w, w);
  CHECK(st.xs == std::vector<std::uint32_t>{3});
  CHECK(st.ys == std::vector<std::uint32_t>{3});
}

TEST_CASE("postprocess equals the quadratic dominance filter") {
  Rng rng(59);
  auto w = identity_weights(1001);
  for (int trial = 0; trial < 300; ++trial) {
    RawPoints raw;
    int m = 1 + static_cast<int>(rng.below(200));
    for (int i = 0; i < m; ++i) {
      raw.points.emplace_back(static_cast<std::uint32_t>(rng.below(1000)),
                              static_cast<std::uint32_t>(rng.below(1000)));
    }
    auto st = postprocess(raw, w, w);
    auto expected = quadratic_filter(raw.points);
    REQUIRE(st.xs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(st.xs[i] == expected[i].first);
      CHECK(st.ys[i] == expected[i].second);
    }
    // Strict staircase shape.
    for (std::size_t i = 1; i < st.xs.size(); ++i) {
      CHECK(st.xs[i - 1] < st.xs[i]);
      CHECK(st.ys[i - 1] > st.ys[i]);
    }
    // dy holds the y values ascending; rmq holds combined weights in x order.
    CHECK(std::is_sorted(st.dy.values.begin(), st.dy.values.end()));
    CHECK(st.weight_rmq.values.size() == st.xs.size());
  }
}

TEST_CASE("split boundary on the documented two-element list") {
  RawPoints raw;
  raw.points = {{3, 10}, {8, 5}};
  auto w = identity_weights(20);
  auto st = postprocess(raw, w, w);
  REQUIRE(st.xs == std::vector<std::uint32_t>{3, 8});

  CHECK(split_x(st, 10, 8) == 1);  // predecessor(10)=8, 8 >= 8: boundary left of 8
  CHECK(split_x(st, 9, 9) == 2);   // predecessor(9)=8 < 9: both points below
  CHECK(split_x(st, 2, 2) == 0);   // below the minimum
}

TEST_CASE("split equals a linear count when keyed by the anchor itself") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    RawPoints raw;
    int m = 1 + static_cast<int>(rng.below(60));
    for (int i = 0; i < m; ++i) {
      raw.points.emplace_back(static_cast<std::uint32_t>(rng.below(300)),
                              static_cast<std::uint32_t>(rng.below(300)));
    }
    auto w = identity_weights(301);
    auto st = postprocess(raw, w, w);
    for (int q = 0; q < 20; ++q) {
      std::uint32_t key = static_cast<std::uint32_t>(rng.below(310));
      std::size_t count_x = 0, count_y = 0;
      for (std::uint32_t x : st.xs) {
        if (x < key) ++count_x;
      }
      for (std::uint32_t y : st.ys) {
        if (y < key) ++count_y;
      }
      CHECK(split_x(st, key, key) == count_x);
      CHECK(split_y(st, key, key) == count_y);
    }
  }
}

TEST_CASE("add_label rejects mismatched labels") {
  auto t1 = WeightedLabelledTree::from_parents({kNoNode, 0, 0}, {0, 1, 2}, {kNoLabel, 1, 2});
  auto t2 = t1;
  auto d1 = decompose(t1, 2);
  auto lca1 = LcaStructure::build(t1);
  SideContext s1{&t1, &d1, &lca1};
  SideContext s2{&t2, &d1, &lca1};
  PointSink sink;
  CHECK_THROWS_AS(add_label(s1, s2, 1, 2, sink), std::invalid_argument);
}

TEST_CASE("add_label on two singleton-decomposed paths fills four structures") {
  // Two 2-node trees at b=2: both heavy trees are singletons, each with one
  // branch, so the label reaches all four branch-pair structures once.
  auto t1 = WeightedLabelledTree::from_parents({kNoNode, 0}, {0, 1}, {kNoLabel, 1});
  auto t2 = WeightedLabelledTree::from_parents({kNoNode, 0}, {0, 2}, {kNoLabel, 1});
  auto d1 = decompose(t1, 2);
  auto d2 = decompose(t2, 2);
  REQUIRE(d1.heavy_tree_count() == 2);
  REQUIRE(d2.heavy_tree_count() == 2);
  auto lca1 = LcaStructure::build(t1);
  auto lca2 = LcaStructure::build(t2);
  SideContext s1{&t1, &d1, &lca1};
  SideContext s2{&t2, &d2, &lca2};
  PointSink sink;
  add_label(s1, s2, 1, 1, sink);
  CHECK(sink.emitted == 4);
  CHECK(sink.by_branch_pair.size() == 4);
  for (const auto& [key, raw] : sink.by_branch_pair) {
    CHECK(raw.points.size() == 1);
  }
}

TEST_CASE("add_label on the figure tree paired with itself") {
  auto t = testing::figure_tree();
  auto d = decompose(t, 3);
  auto lca = LcaStructure::build(t);
  SideContext side{&t, &d, &lca};
  PointSink sink;
  // Leaf 24 sits below node 17 (subtree size 9), the bottom of the root heavy
  // tree's long branch {2, 5, 17}.
  add_label(side, side, 24, 24, sink);
  std::int32_t spine = d.branch_id[17];
  auto it = sink.by_branch_pair.find(PointSink::key(spine, spine));
  REQUIRE(it != sink.by_branch_pair.end());
  std::pair<std::uint32_t, std::uint32_t> expected{d.canonical_pre[17],
                                                   d.canonical_pre[17]};
  CHECK(std::count(it->second.points.begin(), it->second.points.end(), expected) == 1);
}

TEST_CASE("add_label emission count stays within the per-label bound") {
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    TreePair pair = random_pair(rng, 3 + static_cast<NodeId>(rng.below(80)));
    int b = 2 + static_cast<int>(rng.below(4));
    auto d1 = decompose(pair.t1, b);
    auto d2 = decompose(pair.t2, b);
    auto lca1 = LcaStructure::build(pair.t1);
    auto lca2 = LcaStructure::build(pair.t2);
    SideContext s1{&pair.t1, &d1, &lca1};
    SideContext s2{&pair.t2, &d2, &lca2};
    PointSink sink;
    Label label = pair.shared_labels[rng.below(pair.shared_labels.size())];
    add_label(s1, s2, pair.leaf_of_label1.at(label), pair.leaf_of_label2.at(label), sink);
    std::uint64_t layers1 = d1.distinct_layers, layers2 = d2.distinct_layers;
    std::uint64_t per_branch = 2 * static_cast<std::uint64_t>(b) - 1;
    CHECK(sink.emitted <= layers1 * layers2 * per_branch * per_branch);

    // Emitted coordinates satisfy the on-branch-path property.
    for (const auto& [key, raw] : sink.by_branch_pair) {
      std::int32_t e1 = static_cast<std::int32_t>(key >> 32);
      std::int32_t e2 = static_cast<std::int32_t>(key & 0xffffffffu);
      for (const auto& [x, y] : raw.points) {
        NodeId w1 = d1.pre_to_node[x];
        NodeId w2 = d2.pre_to_node[y];
        CHECK(d1.heavy_tree_id[w1] == d1.branch_heavy_tree[e1]);
        CHECK(d1.is_weak_ancestor(w1, d1.branch_bottom[e1]));
        CHECK(d2.heavy_tree_id[w2] == d2.branch_heavy_tree[e2]);
        CHECK(d2.is_weak_ancestor(w2, d2.branch_bottom[e2]));
      }
    }
  }
}

TEST_CASE("collect_relevant_pairs on simple cases") {
  // One shared label: exactly the Cartesian product of the two sequences.
  auto t1 = testing::figure_tree();
  auto t2 = path_tree(5);
  t2.leaf_label[4] = 1;  // matches figure label 1 (node 6)
  auto pair = TreePair::make(t1, t2);
  REQUIRE(pair.shared_labels.size() == 1);
  auto d1 = decompose(pair.t1, 3);
  auto d2 = decompose(pair.t2, 3);
  auto lca1 = LcaStructure::build(pair.t1);
  auto lca2 = LcaStructure::build(pair.t2);
  SideContext s1{&pair.t1, &d1, &lca1};
  SideContext s2{&pair.t2, &d2, &lca2};
  auto dict = collect_relevant_pairs(pair, s1, s2);
  auto seq1 = heavy_tree_sequence(pair.t1, d1, 6);
  auto seq2 = heavy_tree_sequence(pair.t2, d2, 4);
  CHECK(dict.size() == seq1.size() * seq2.size());
  for (const auto& a : seq1) {
    for (const auto& b : seq2) {
      CHECK(dict.contains(a.heavy_tree, b.heavy_tree));
    }
  }

  // Disjoint label sets: empty dictionary.
  auto u1 = WeightedLabelledTree::from_parents({kNoNode, 0}, {0, 1}, {kNoLabel, 1});
  auto u2 = WeightedLabelledTree::from_parents({kNoNode, 0}, {0, 1}, {kNoLabel, 9});
  auto disjoint = TreePair::make(std::move(u1), std::move(u2));
  auto du1 = decompose(disjoint.t1, 2);
  auto du2 = decompose(disjoint.t2, 2);
  auto lu1 = LcaStructure::build(disjoint.t1);
  auto lu2 = LcaStructure::build(disjoint.t2);
  SideContext ds1{&disjoint.t1, &du1, &lu1};
  SideContext ds2{&disjoint.t2, &du2, &lu2};
  CHECK(collect_relevant_pairs(disjoint, ds1, ds2).size() == 0);
}

TEST_CASE("relevant pairs are exactly the induced heavy-tree roots") {
  Rng rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    TreePair pair = random_pair(rng, 3 + static_cast<NodeId>(rng.below(60)));
    int b = 2 + static_cast<int>(rng.below(4));
    auto d1 = decompose(pair.t1, b);
    auto d2 = decompose(pair.t2, b);
    auto lca1 = LcaStructure::build(pair.t1);
    auto lca2 = LcaStructure::build(pair.t2);
    SideContext s1{&pair.t1, &d1, &lca1};
    SideContext s2{&pair.t2, &d2, &lca2};
    auto dict = collect_relevant_pairs(pair, s1, s2);
    auto oracle = BruteOracle::build(pair);
    for (std::int32_t h1 = 0; h1 < d1.heavy_tree_count(); ++h1) {
      for (std::int32_t h2 = 0; h2 < d2.heavy_tree_count(); ++h2) {
        bool induced = oracle.induced(d1.heavy_tree_root[h1], d2.heavy_tree_root[h2]);
        CHECK(dict.contains(h1, h2) == induced);
      }
    }
  }
}

TEST_CASE("restricted query on the hand-checked staircase") {
  RawPoints raw;
  raw.points = {{4, 7}, {5, 3}};
  auto w = identity_weights(10);
  auto st = postprocess(raw, w, w);
  std::vector<NodeId> id_nodes(10);
  std::iota(id_nodes.begin(), id_nodes.end(), 0);
  TreesView view{&id_nodes, &id_nodes, &w, &w, &w, &w};

  // Anchors at preorders 6 and 5 (nodes 6 and 5 under the identity maps).
  std::size_t beta_x = split_x(st, 6, 6);
  std::size_t beta_y = split_y(st, 5, 5);
  CHECK(beta_x == 2);
  CHECK(beta_y == 1);
  auto answer = restricted_hia(st, 6, 5, beta_x, beta_y, view);
  REQUIRE(answer.has_value());
  // Case 1 offers (5,3) = 8; case 2 offers (4, x2) = 4 + 5 = 9; cases 3 and 4
  // are empty. The case-2 candidate wins.
  CHECK(answer->total == 9);
  CHECK(answer->u1 == 4);
  CHECK(answer->u2 == 5);

  // Case masks isolate the candidates.
  auto only1 = restricted_hia(st, 6, 5, beta_x, beta_y, view, 1u);
  REQUIRE(only1.has_value());
  CHECK(only1->total == 8);
  CHECK(!restricted_hia(st, 6, 5, beta_x, beta_y, view, 4u | 8u).has_value());
}

TEST_CASE("anchors below all points leave only case 4") {
  RawPoints raw;
  raw.points = {{4, 7}, {5, 3}};
  auto w = identity_weights(10);
  auto st = postprocess(raw, w, w);
  std::vector<NodeId> id_nodes(10);
  std::iota(id_nodes.begin(), id_nodes.end(), 0);
  TreesView view{&id_nodes, &id_nodes, &w, &w, &w, &w};

  std::size_t beta_x = split_x(st, 2, 2);
  std::size_t beta_y = split_y(st, 1, 1);
  CHECK(beta_x == 0);
  CHECK(beta_y == 0);
  auto answer = restricted_hia(st, 2, 1, beta_x, beta_y, view);
  REQUIRE(answer.has_value());
  CHECK(answer->u1 == 2);
  CHECK(answer->u2 == 1);
  CHECK(answer->total == 3);
  CHECK(!restricted_hia(st, 2, 1, beta_x, beta_y, view, 0x7u).has_value());
}

TEST_CASE("restricted query equals the brute oracle over heavy-tree pairs") {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    NodeId n = 3 + static_cast<NodeId>(rng.below(40));
    TreePair pair = random_pair(rng, n);
    HiaIndex index = build_index(std::move(pair), 2 + static_cast<int>(rng.below(3)));
    auto oracle = BruteOracle::build(index.pair);
    TreesView view = index.view();

    for (int q = 0; q < 10; ++q) {
      NodeId v1 = static_cast<NodeId>(rng.below(index.pair.t1.node_count));
      NodeId v2 = static_cast<NodeId>(rng.below(index.pair.t2.node_count));
      auto seq1 = heavy_tree_sequence(index.pair.t1, index.d1, v1);
      auto seq2 = heavy_tree_sequence(index.pair.t2, index.d2, v2);
      for (const auto& a : seq1) {
        for (const auto& b : seq2) {
          auto expected =
              oracle.restricted_hia(v1, v2, index.d1, index.d2, a.heavy_tree, b.heavy_tree);
          const Staircase* st =
              index.staircase(index.d1.branch_id[a.anchor], index.d2.branch_id[b.anchor]);
          std::optional<PairAnswer> got;
          if (st) {
            std::size_t beta_x = split_x(*st, index.d1.canonical_pre[v1],
                                         index.d1.canonical_pre[a.anchor]);
            std::size_t beta_y = split_y(*st, index.d2.canonical_pre[v2],
                                         index.d2.canonical_pre[b.anchor]);
            got = restricted_hia(*st, a.anchor, b.anchor, beta_x, beta_y, view);
          }
          CHECK(got.has_value() == expected.has_value());
          if (got && expected) CHECK(got->total == expected->total);
        }
      }
    }
  }
}
