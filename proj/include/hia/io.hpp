#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hia/tree.hpp"

namespace hia {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format, one tree per file:
//   line 1: n
//   line 2: n parent ids; the root is node 0 with parent -1
//   line 3: n weights
//   line 4: leaf labels as space-separated "node:label" pairs
WeightedLabelledTree parse_tree(std::istream& in);
WeightedLabelledTree parse_tree_file(const std::string& path);
std::string serialize_tree(const WeightedLabelledTree& tree);
void write_tree_file(const WeightedLabelledTree& tree, const std::string& path);

}  // namespace hia
