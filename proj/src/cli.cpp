#include "hia/cli.hpp"

#include <exception>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hia/anchors.hpp"
#include "hia/engine.hpp"
#include "hia/harness.hpp"
#include "hia/io.hpp"

namespace hia {

namespace {

HiaIndex load_index(const std::string& path1, const std::string& path2, int b) {
  WeightedLabelledTree t1 = parse_tree_file(path1);
  WeightedLabelledTree t2 = parse_tree_file(path2);
  for (const auto* t : {&t1, &t2}) {
    ValidationReport report = validate(*t);
    if (!report.ok()) {
      throw std::runtime_error("invalid tree: " + report.violations.front().message);
    }
  }
  return build_index(TreePair::make(std::move(t1), std::move(t2)), b);
}

void print_summary(std::ostream& out, const HiaIndex& index) {
  auto tree_line = [&](const char* name, const WeightedLabelledTree& t,
                       const Decomposition& d) {
    out << name << ": n=" << t.node_count << " layers=" << d.distinct_layers
        << " heavy_trees=" << d.heavy_tree_count() << " branches=" << d.branch_count()
        << "\n";
  };
  tree_line("tree1", index.pair.t1, index.d1);
  tree_line("tree2", index.pair.t2, index.d2);
  out << "shared_labels=" << index.pair.shared_labels.size()
      << " relevant_pairs=" << index.relevant.size()
      << " staircases=" << index.stats.staircases
      << " points=" << index.stats.points_emitted
      << " retained=" << index.stats.points_retained
      << " product_nodes=" << index.stats.product_nodes << "\n"
      << "build_seconds=" << index.stats.build_seconds << "\n";
}

std::vector<NodeId> parse_sizes(const std::string& csv) {
  std::vector<NodeId> sizes;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    sizes.push_back(static_cast<NodeId>(std::stol(item)));
  }
  return sizes;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heaviest induced ancestors index"};
  app.require_subcommand(1);

  std::string tree1_path, tree2_path;
  int b = 0;
  std::uint64_t seed = 42;
  std::string engine_name = "both";

  auto* cmd_build = app.add_subcommand("build", "build the index and print a summary");
  cmd_build->add_option("tree1", tree1_path)->required();
  cmd_build->add_option("tree2", tree2_path)->required();
  cmd_build->add_option("--b", b, "branching parameter (0 = max(2, floor(log2 n)))");

  long long q1 = 0, q2 = 0;
  auto* cmd_query = app.add_subcommand("query", "answer one HIA query");
  cmd_query->add_option("tree1", tree1_path)->required();
  cmd_query->add_option("tree2", tree2_path)->required();
  cmd_query->add_option("v1", q1)->required();
  cmd_query->add_option("v2", q2)->required();
  cmd_query->add_option("--b", b);
  cmd_query->add_option("--engine", engine_name)
      ->check(CLI::IsMember({"independent", "cascading", "both"}));

  int trials = 200;
  long long n_max = 60;
  auto* cmd_verify = app.add_subcommand("verify", "random-instance oracle check");
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--trials", trials);
  cmd_verify->add_option("--n-max", n_max);

  std::string sizes_csv = "1024,4096,16384";
  int queries = 200;
  auto* cmd_bench = app.add_subcommand("bench", "instrumented benchmark CSV");
  cmd_bench->add_option("--seed", seed);
  cmd_bench->add_option("--sizes", sizes_csv, "comma-separated instance sizes");
  cmd_bench->add_option("--b", b);
  cmd_bench->add_option("--queries", queries, "queries per size");

  std::string text, anchors_csv, left_context, right_context;
  auto* cmd_anchors = app.add_subcommand("anchors", "longest crossing substring demo");
  cmd_anchors->add_option("--text", text)->required();
  cmd_anchors->add_option("--anchors", anchors_csv, "comma-separated positions (1-based)")
      ->required();
  cmd_anchors->add_option("--left", left_context);
  cmd_anchors->add_option("--right", right_context);
  cmd_anchors->add_option("--b", b);

  std::vector<const char*> argv;
  argv.push_back("hia");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_build->parsed()) {
      HiaIndex index = load_index(tree1_path, tree2_path, b);
      print_summary(out, index);
      return 0;
    }
    if (cmd_query->parsed()) {
      HiaIndex index = load_index(tree1_path, tree2_path, b);
      auto run = [&](Engine engine, const char* name) {
        QueryStats stats;
        auto answer = hia_query(index, static_cast<NodeId>(q1),
                                static_cast<NodeId>(q2), engine, &stats);
        out << name << ": ";
        if (answer) {
          out << "u1=" << answer->u1 << " u2=" << answer->u2
              << " total_weight=" << answer->total;
        } else {
          out << "no induced pair";
        }
        out << " trace=" << stats.trace_length << " comparisons=" << stats.comparisons
            << " hops=" << stats.bridge_hops << "\n";
        return answer;
      };
      if (engine_name == "independent") {
        run(Engine::kIndependent, "independent");
      } else if (engine_name == "cascading") {
        run(Engine::kCascading, "cascading");
      } else {
        auto a = run(Engine::kIndependent, "independent");
        auto c = run(Engine::kCascading, "cascading");
        bool agree = (!a && !c) || (a && c && a->total == c->total);
        out << "engines_agree=" << (agree ? "yes" : "no") << "\n";
        if (!agree) return 1;
      }
      return 0;
    }
    if (cmd_verify->parsed()) {
      VerifyReport report = verify_run(seed, trials, static_cast<NodeId>(n_max));
      out << verify_report_text(report);
      return report.passed ? 0 : 1;
    }
    if (cmd_bench->parsed()) {
      auto rows = bench_run(seed, parse_sizes(sizes_csv), b, queries);
      out << bench_csv(rows);
      return 0;
    }
    if (cmd_anchors->parsed()) {
      std::vector<std::int32_t> anchors;
      for (NodeId v : parse_sizes(anchors_csv)) anchors.push_back(v);
      AnchoredText anchored = build_anchored(text, std::move(anchors), b);
      out << "anchors=" << anchored.anchors.size()
          << " trie_left_nodes=" << anchored.trie_left.node_count
          << " trie_right_nodes=" << anchored.trie_right.node_count << "\n";
      auto answer = longest_crossing(anchored, left_context, right_context);
      if (answer) {
        out << "length=" << answer->length << " anchor=" << answer->anchor << "\n";
      } else {
        out << "no crossing substring\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hia
