#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hia/gen.hpp"
#include "hia/oracle.hpp"

using namespace hia;

namespace {

// Two 3-node trees: roots with two labelled leaves each.
//   t1: root(w=0) -> a(w=1, label 1), b(w=5, label 2)
//   t2: root(w=0) -> c(w=7, label 1), d(w=2, label 2)
TreePair two_leaf_pair() {
  auto t1 = WeightedLabelledTree::from_parents({kNoNode, 0, 0}, {0, 1, 5}, {kNoLabel, 1, 2});
  auto t2 = WeightedLabelledTree::from_parents({kNoNode, 0, 0}, {0, 7, 2}, {kNoLabel, 1, 2});
  return TreePair::make(std::move(t1), std::move(t2));
}

std::set<Label> leaf_labels_below(const WeightedLabelledTree& t, NodeId u) {
  std::set<Label> out;
  std::vector<NodeId> stack = {u};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (t.is_leaf(v)) out.insert(t.leaf_label[v]);
    for (NodeId c : t.children[v]) stack.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("induced basics") {
  auto pair = two_leaf_pair();
  auto oracle = BruteOracle::build(pair);
  CHECK(oracle.induced(0, 0));     // roots, shared labels exist
  CHECK(oracle.induced(1, 1));     // same label 1
  CHECK(!oracle.induced(1, 2));    // labels 1 vs 2
  CHECK(oracle.witness_label(2, 2) == Label{2});
}

TEST_CASE("induced equals naive leaf enumeration") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    TreePair pair = random_pair(rng, 30);
    auto oracle = BruteOracle::build(pair);
    for (NodeId u1 = 0; u1 < pair.t1.node_count; ++u1) {
      auto left = leaf_labels_below(pair.t1, u1);
      for (NodeId u2 = 0; u2 < pair.t2.node_count; ++u2) {
        auto right = leaf_labels_below(pair.t2, u2);
        bool naive = false;
        for (Label l : left) {
          if (right.count(l)) naive = true;
        }
        CHECK(oracle.induced(u1, u2) == naive);
      }
    }
  }
}

TEST_CASE("monotonicity of being induced") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    TreePair pair = random_pair(rng, 40);
    auto oracle = BruteOracle::build(pair);
    for (NodeId u1 = 0; u1 < pair.t1.node_count; ++u1) {
      for (NodeId u2 = 0; u2 < pair.t2.node_count; ++u2) {
        if (!oracle.induced(u1, u2)) continue;
        if (pair.t1.parent[u1] != kNoNode) CHECK(oracle.induced(pair.t1.parent[u1], u2));
        if (pair.t2.parent[u2] != kNoNode) CHECK(oracle.induced(u1, pair.t2.parent[u2]));
      }
    }
  }
}

TEST_CASE("brute hia on the two-leaf instance") {
  auto pair = two_leaf_pair();
  auto oracle = BruteOracle::build(pair);

  auto ac = oracle.hia(1, 1);  // (a, c): both label 1
  REQUIRE(ac.has_value());
  CHECK(ac->total == 8);
  CHECK(ac->u1 == 1);
  CHECK(ac->u2 == 1);

  auto ad = oracle.hia(1, 2);  // (a, d): only (root1, d) and shallower qualify
  REQUIRE(ad.has_value());
  CHECK(ad->total == 2);
  CHECK(ad->u1 == 0);
  CHECK(ad->u2 == 2);

  auto roots = oracle.hia(0, 0);
  REQUIRE(roots.has_value());
  CHECK(roots->total == 0);
}

TEST_CASE("brute hia is absent iff no shared label under both") {
  auto t1 = WeightedLabelledTree::from_parents({kNoNode, 0}, {0, 1}, {kNoLabel, 1});
  auto t2 = WeightedLabelledTree::from_parents({kNoNode, 0}, {0, 1}, {kNoLabel, 2});
  auto pair = TreePair::make(std::move(t1), std::move(t2));
  auto oracle = BruteOracle::build(pair);
  CHECK(!oracle.hia(1, 1).has_value());
  CHECK(!oracle.hia(0, 0).has_value());
}

TEST_CASE("brute hia weight never increases moving the query up") {
  Rng rng(53);
  TreePair pair = random_pair(rng, 35);
  auto oracle = BruteOracle::build(pair);
  for (NodeId v1 = 0; v1 < pair.t1.node_count; ++v1) {
    for (NodeId v2 = 0; v2 < pair.t2.node_count; ++v2) {
      auto here = oracle.hia(v1, v2);
      if (pair.t1.parent[v1] != kNoNode) {
        auto up = oracle.hia(pair.t1.parent[v1], v2);
        if (here && up) CHECK(up->total <= here->total);
        if (up) CHECK(here.has_value());
      }
    }
  }
}
