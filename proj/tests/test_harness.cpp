#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "hia/cli.hpp"
#include "hia/harness.hpp"
#include "hia/io.hpp"
#include "hia/staircase.hpp"

using namespace hia;

namespace {

// A query path with case 3 of the restricted query disabled; verify must
// catch the lost candidates.
std::optional<PairAnswer> broken_case3_query(const HiaIndex& index, NodeId v1,
                                             NodeId v2) {
  auto trace = query_trace(index, v1, v2);
  TreesView view = index.view();
  std::optional<PairAnswer> best;
  for (const auto& entry : trace) {
    const Staircase* st = index.staircase(entry.branch1, entry.branch2);
    if (st == nullptr) continue;
    std::size_t beta_x = split_x(*st, index.d1.canonical_pre[v1],
                                 index.d1.canonical_pre[entry.x1]);
    std::size_t beta_y = split_y(*st, index.d2.canonical_pre[v2],
                                 index.d2.canonical_pre[entry.x2]);
    auto answer = restricted_hia(*st, entry.x1, entry.x2, beta_x, beta_y, view,
                                 0xFu & ~4u);
    if (answer && (!best || answer->total > best->total)) best = answer;
  }
  return best;
}

std::string temp_tree_file(const WeightedLabelledTree& tree, const char* name) {
  std::string path = std::string("/tmp/hia_test_") + name + ".tree";
  write_tree_file(tree, path);
  return path;
}

}  // namespace

TEST_CASE("tree files round-trip") {
  Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    TreePair pair = random_pair(rng, 3 + static_cast<NodeId>(rng.below(60)));
    std::istringstream in(serialize_tree(pair.t1));
    auto back = parse_tree(in);
    CHECK(back.parent == pair.t1.parent);
    CHECK(back.weight == pair.t1.weight);
    CHECK(back.leaf_label == pair.t1.leaf_label);
    CHECK(back.children == pair.t1.children);
  }
}

TEST_CASE("parser rejects malformed input") {
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_tree(empty), ParseError);
  std::istringstream bad_root("2\n0 0\n0 1\n1:1\n");
  CHECK_THROWS_AS(parse_tree(bad_root), ParseError);
  std::istringstream short_weights("2\n-1 0\n0\n1:1\n");
  CHECK_THROWS_AS(parse_tree(short_weights), ParseError);
}

TEST_CASE("verify passes vacuously with zero trials") {
  auto report = verify_run(1, 0, 10);
  CHECK(report.passed);
  CHECK(report.queries == 0);
}

TEST_CASE("verify passes on a healthy engine") {
  auto report = verify_run(7, 15, 30);
  CHECK(report.passed);
  CHECK(report.queries > 0);
}

TEST_CASE("verify is reproducible for a fixed seed") {
  auto a = verify_run(99, 5, 25);
  auto b = verify_run(99, 5, 25);
  CHECK(verify_report_text(a) == verify_report_text(b));
  // Bench rows repeat exactly, wall time aside.
  auto rows_a = bench_run(3, {64, 96}, 0, 25);
  auto rows_b = bench_run(3, {64, 96}, 0, 25);
  REQUIRE(rows_a.size() == rows_b.size());
  for (std::size_t i = 0; i < rows_a.size(); ++i) {
    rows_a[i].build_ms = rows_b[i].build_ms = 0;
  }
  CHECK(bench_csv(rows_a) == bench_csv(rows_b));
}

TEST_CASE("verify catches a sabotaged case 3") {
  auto report = verify_run(42, 40, 30, broken_case3_query);
  CHECK(!report.passed);
  CHECK(report.counterexample.find("expected") != std::string::npos);
}

TEST_CASE("bench rows respect the documented bounds") {
  auto rows = bench_run(5, {64, 256}, 0, 30);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.points_emitted <= row.points_bound);
    CHECK(row.max_trace <= row.trace_bound);
    CHECK(row.avg_cmp_cascading > 0);
    CHECK(row.avg_cmp_independent > 0);
  }
  auto csv = bench_csv(rows);
  CHECK(csv.find("n,b,seed") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
}

TEST_CASE("cli build prints the figure summary") {
  auto tree = testing::figure_tree();
  auto path = temp_tree_file(tree, "fig");
  std::ostringstream out, err;
  int rc = run_cli({"build", path, path, "--b", "3"}, out, err);
  CHECK(rc == 0);
  CHECK(out.str().find("layers=3") != std::string::npos);
  CHECK(out.str().find("branches=15") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli query runs both engines and agrees") {
  auto tree = testing::figure_tree();
  auto path = temp_tree_file(tree, "fig_query");
  std::ostringstream out, err;
  int rc = run_cli({"query", path, path, "0", "0", "--b", "3"}, out, err);
  CHECK(rc == 0);
  CHECK(out.str().find("engines_agree=yes") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(run_cli({"query", path, path, "99", "0", "--b", "3"}, out2, err2) != 0);
  std::remove(path.c_str());
}

TEST_CASE("cli build fails loudly on malformed weights") {
  std::string path = "/tmp/hia_test_badweights.tree";
  {
    std::ofstream out(path);
    out << "2\n-1 0\n0 0\n1:1\n";  // child weight equals the root's
  }
  std::ostringstream out, err;
  int rc = run_cli({"build", path, path}, out, err);
  CHECK(rc != 0);
  CHECK(err.str().find("non-increasing weight") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli verify and anchors subcommands") {
  std::ostringstream out, err;
  int rc = run_cli({"verify", "--seed", "11", "--trials", "3", "--n-max", "20"}, out, err);
  CHECK(rc == 0);
  CHECK(out.str().find("PASS") == 0);

  std::ostringstream out2, err2;
  rc = run_cli({"anchors", "--text", "abcab", "--anchors", "4", "--left", "abc",
                "--right", "ab"},
               out2, err2);
  CHECK(rc == 0);
  CHECK(out2.str().find("length=5 anchor=4") != std::string::npos);
}
