#include "hia/harness.hpp"

#include <sstream>

#include "hia/io.hpp"
#include "hia/oracle.hpp"

namespace hia {

namespace {

std::string describe_answer(const std::optional<PairAnswer>& a) {
  if (!a) return "none";
  std::ostringstream out;
  out << "(" << a->u1 << ", " << a->u2 << ") weight " << a->total;
  return out.str();
}

}  // namespace

VerifyReport verify_run(std::uint64_t seed, int trials, NodeId n_max,
                        const QueryFn& custom) {
  VerifyReport report;
  report.trials = trials;
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    NodeId n = static_cast<NodeId>(rng.range(3, n_max));
    TreePair pair = random_pair(rng, n);
    HiaIndex index = build_index(std::move(pair));
    BruteOracle oracle = BruteOracle::build(index.pair);

    std::vector<std::pair<NodeId, NodeId>> queries;
    if (n <= 25) {
      for (NodeId v1 = 0; v1 < index.pair.t1.node_count; ++v1) {
        for (NodeId v2 = 0; v2 < index.pair.t2.node_count; ++v2) {
          queries.emplace_back(v1, v2);
        }
      }
    } else {
      for (int q = 0; q < 200; ++q) {
        queries.emplace_back(
            static_cast<NodeId>(rng.below(index.pair.t1.node_count)),
            static_cast<NodeId>(rng.below(index.pair.t2.node_count)));
      }
    }

    for (auto [v1, v2] : queries) {
      ++report.queries;
      auto expected = oracle.hia(v1, v2);
      std::optional<PairAnswer> got_a, got_b;
      const char* engine_name = "custom";
      if (custom) {
        got_a = custom(index, v1, v2);
        got_b = got_a;
      } else {
        engine_name = "independent/cascading";
        got_a = hia_query(index, v1, v2, Engine::kIndependent);
        got_b = hia_query(index, v1, v2, Engine::kCascading);
      }
      auto weight_of = [](const std::optional<PairAnswer>& a) {
        return a ? static_cast<std::int64_t>(a->total) : std::int64_t{-1};
      };
      if (weight_of(got_a) != weight_of(expected) ||
          weight_of(got_b) != weight_of(expected)) {
        report.passed = false;
        std::ostringstream out;
        out << "trial " << trial << " seed " << seed << " n " << n << " query (" << v1
            << ", " << v2 << ") engines " << engine_name << "\n"
            << "expected " << describe_answer(expected) << "\n"
            << "engine A " << describe_answer(got_a) << "\n"
            << "engine B " << describe_answer(got_b) << "\n"
            << "tree1:\n"
            << serialize_tree(index.pair.t1) << "tree2:\n"
            << serialize_tree(index.pair.t2);
        report.counterexample = out.str();
        return report;
      }
    }
  }
  return report;
}

std::string verify_report_text(const VerifyReport& report) {
  std::ostringstream out;
  if (report.passed) {
    out << "PASS trials=" << report.trials << " queries=" << report.queries << "\n";
  } else {
    out << "FAIL after " << report.queries << " queries\n" << report.counterexample;
  }
  return out.str();
}

std::vector<BenchRow> bench_run(std::uint64_t seed, const std::vector<NodeId>& sizes,
                                int b, int queries_per_size) {
  std::vector<BenchRow> rows;
  for (NodeId n : sizes) {
    Rng rng(seed ^ static_cast<std::uint64_t>(n));
    TreePair pair = random_pair(rng, n);
    HiaIndex index = build_index(std::move(pair), b);

    BenchRow row;
    row.n = n;
    row.b = index.d1.b;
    row.seed = seed;
    row.queries = queries_per_size;
    row.points_emitted = index.stats.points_emitted;
    row.points_bound = index.stats.points_bound;
    row.staircases = index.stats.staircases;
    row.build_ms = index.stats.build_seconds * 1000.0;
    {
      int layers = 0;
      std::int64_t acc = 1;
      while (acc <= n / row.b) {
        acc *= row.b;
        ++layers;
      }
      row.trace_bound = 2 * (layers + 1);
    }

    long total_trace = 0, total_ci = 0, total_cc = 0, total_hops = 0;
    for (int q = 0; q < queries_per_size; ++q) {
      NodeId v1 = static_cast<NodeId>(rng.below(index.pair.t1.node_count));
      NodeId v2 = static_cast<NodeId>(rng.below(index.pair.t2.node_count));
      QueryStats si, sc;
      auto a = hia_query(index, v1, v2, Engine::kIndependent, &si);
      auto c = hia_query(index, v1, v2, Engine::kCascading, &sc);
      if ((a && c && a->total != c->total) || (!a != !c)) {
        throw std::logic_error("bench: engine mismatch");
      }
      total_trace += si.trace_length;
      row.max_trace = std::max(row.max_trace, si.trace_length);
      total_ci += si.comparisons;
      total_cc += sc.comparisons;
      total_hops += sc.bridge_hops;
    }
    if (queries_per_size > 0) {
      row.avg_trace = double(total_trace) / queries_per_size;
      row.avg_cmp_independent = double(total_ci) / queries_per_size;
      row.avg_cmp_cascading = double(total_cc) / queries_per_size;
      row.avg_bridge_hops = double(total_hops) / queries_per_size;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,b,seed,queries,avg_trace,max_trace,trace_bound,avg_cmp_independent,"
         "avg_cmp_cascading,avg_bridge_hops,points_emitted,points_bound,"
         "staircases,build_ms\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.b << ',' << r.seed << ',' << r.queries << ',' << r.avg_trace
        << ',' << r.max_trace << ',' << r.trace_bound << ',' << r.avg_cmp_independent
        << ',' << r.avg_cmp_cascading << ',' << r.avg_bridge_hops << ','
        << r.points_emitted << ',' << r.points_bound << ',' << r.staircases << ','
        << r.build_ms << '\n';
  }
  return out.str();
}

}  // namespace hia
