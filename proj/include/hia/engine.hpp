#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hia/cascade.hpp"
#include "hia/decomposition.hpp"
#include "hia/oracle.hpp"
#include "hia/staircase.hpp"
#include "hia/substructures.hpp"
#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

enum class Engine { kIndependent, kCascading };

struct BuildStats {
  std::uint64_t points_emitted = 0;
  std::uint64_t points_bound = 0;  // n * (floor(log_b n)+1)^2 * (2b-1)^2
  std::uint64_t points_retained = 0;
  std::size_t staircases = 0;
  std::size_t product_nodes = 0;
  std::uint64_t augmented_x = 0;
  std::uint64_t augmented_y = 0;
  double build_seconds = 0.0;
};

struct QueryStats {
  int trace_length = 0;
  int restricted_queries = 0;
  long comparisons = 0;
  long bridge_hops = 0;
  int reseeds = 0;
};

struct TraceEntry {
  int i = 0;
  int j = 0;
  std::int32_t heavy_tree1 = -1;
  std::int32_t heavy_tree2 = -1;
  std::int32_t branch1 = -1;
  std::int32_t branch2 = -1;
  NodeId x1 = kNoNode;  // lowest anchors supplying the branch pair
  NodeId x2 = kNoNode;
  bool relevant = false;
  std::size_t beta_x = 0;  // filled when a restricted query ran
  std::size_t beta_y = 0;
  std::optional<PairAnswer> answer;
};

// The assembled index: both decompositions over one canonical preorder each,
// the relevant-pair dictionary, all staircases, and the catalog machinery for
// the cascading engine. Immutable after build; queries are const.
struct HiaIndex {
  TreePair pair;
  Decomposition d1, d2;
  LcaStructure lca1, lca2;
  std::vector<Weight> w1_by_pre, w2_by_pre;
  PairDictionary relevant;
  std::unordered_map<std::uint64_t, Staircase> staircases;
  BranchTree bt1, bt2;
  GadgetTree gt1, gt2;
  CatalogGraph product;
  CascadeSide cascade_x, cascade_y;
  BuildStats stats;

  TreesView view() const;
  const Staircase* staircase(std::int32_t e1, std::int32_t e2) const;
};

// Validates both trees (throws std::invalid_argument listing the first
// violation), decomposes with the given b (0 = max(2, floor(log2 n))), and
// builds every query structure.
HiaIndex build_index(TreePair pair, int b = 0);

int default_b(std::int64_t n);

std::optional<PairAnswer> hia_query(const HiaIndex& index, NodeId v1, NodeId v2,
                                    Engine engine, QueryStats* stats = nullptr,
                                    std::vector<TraceEntry>* trace = nullptr);

// The exact sequence of restricted queries the two-pointer driver performs.
std::vector<TraceEntry> query_trace(const HiaIndex& index, NodeId v1, NodeId v2);

}  // namespace hia
