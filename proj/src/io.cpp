#include "hia/io.hpp"

#include <fstream>
#include <sstream>

namespace hia {

WeightedLabelledTree parse_tree(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing node count line");
  std::int64_t n = 0;
  try {
    n = std::stoll(line);
  } catch (const std::exception&) {
    throw ParseError("bad node count: " + line);
  }
  if (n <= 0 || n > (std::int64_t{1} << 30)) {
    throw ParseError("node count out of range: " + line);
  }

  if (!std::getline(in, line)) throw ParseError("missing parent line");
  std::istringstream parents_in(line);
  std::vector<NodeId> parents(n);
  for (std::int64_t i = 0; i < n; ++i) {
    long long p;
    if (!(parents_in >> p)) throw ParseError("parent line too short");
    if (p < -1 || p >= n) throw ParseError("parent id out of range");
    parents[i] = static_cast<NodeId>(p);
  }
  if (parents[0] != kNoNode) throw ParseError("node 0 must be the root (parent -1)");

  if (!std::getline(in, line)) throw ParseError("missing weight line");
  std::istringstream weights_in(line);
  std::vector<Weight> weights(n);
  for (std::int64_t i = 0; i < n; ++i) {
    long long w;
    if (!(weights_in >> w)) throw ParseError("weight line too short");
    if (w < 0) throw ParseError("weights must be non-negative");
    weights[i] = static_cast<Weight>(w);
  }

  std::vector<Label> labels(n, kNoLabel);
  if (std::getline(in, line)) {
    std::istringstream labels_in(line);
    std::string pair;
    while (labels_in >> pair) {
      auto colon = pair.find(':');
      if (colon == std::string::npos) throw ParseError("bad label pair: " + pair);
      long long node, label;
      try {
        node = std::stoll(pair.substr(0, colon));
        label = std::stoll(pair.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError("bad label pair: " + pair);
      }
      if (node < 0 || node >= n) throw ParseError("label node out of range: " + pair);
      labels[node] = static_cast<Label>(label);
    }
  }
  return WeightedLabelledTree::from_parents(std::move(parents), std::move(weights),
                                            std::move(labels));
}

WeightedLabelledTree parse_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_tree(in);
}

std::string serialize_tree(const WeightedLabelledTree& tree) {
  std::ostringstream out;
  out << tree.node_count << '\n';
  for (NodeId v = 0; v < tree.node_count; ++v) {
    out << (v ? " " : "") << tree.parent[v];
  }
  out << '\n';
  for (NodeId v = 0; v < tree.node_count; ++v) {
    out << (v ? " " : "") << tree.weight[v];
  }
  out << '\n';
  bool first = true;
  for (NodeId v = 0; v < tree.node_count; ++v) {
    if (tree.leaf_label[v] != kNoLabel) {
      out << (first ? "" : " ") << v << ':' << tree.leaf_label[v];
      first = false;
    }
  }
  out << '\n';
  return out.str();
}

void write_tree_file(const WeightedLabelledTree& tree, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << serialize_tree(tree);
}

}  // namespace hia
