#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hia/engine.hpp"
#include "hia/gen.hpp"
#include "hia/types.hpp"

namespace hia {

// Replaceable query path for fault-injection tests; the default runs both
// engines and cross-checks them.
using QueryFn =
    std::function<std::optional<PairAnswer>(const HiaIndex&, NodeId, NodeId)>;

struct VerifyReport {
  bool passed = true;
  int trials = 0;
  long queries = 0;
  std::string counterexample;  // first failure, verbatim; empty on pass
};

// Random tree pairs with a label bijection; every query is checked against
// the brute-force oracle. All queries are run when n <= 25, otherwise 200
// sampled ones per instance. Bit-reproducible for a fixed seed.
VerifyReport verify_run(std::uint64_t seed, int trials, NodeId n_max,
                        const QueryFn& custom = {});
std::string verify_report_text(const VerifyReport& report);

struct BenchRow {
  NodeId n = 0;
  int b = 0;
  std::uint64_t seed = 0;
  int queries = 0;
  double avg_trace = 0;
  int max_trace = 0;
  int trace_bound = 0;  // 2 * (floor(log_b n) + 1)
  double avg_cmp_independent = 0;
  double avg_cmp_cascading = 0;
  double avg_bridge_hops = 0;
  std::uint64_t points_emitted = 0;
  std::uint64_t points_bound = 0;
  std::size_t staircases = 0;
  double build_ms = 0;
};

std::vector<BenchRow> bench_run(std::uint64_t seed, const std::vector<NodeId>& sizes,
                                int b, int queries_per_size);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace hia
