#pragma once

#include <vector>

#include "hia/tree.hpp"

namespace hia::testing {

// The 26-node reference tree. Ids are fixed; the comment after each entry is
// the node's subtree size, matching the figure the decomposition tests pin.
//
//   0(26) -> 1(13), 2(12)
//   1(13) -> 3(6), 4(6)
//   2(12) -> 5(10), 6(1)
//   3(6)  -> 7(5) -> 8(4) -> 9(3) -> 10(2) -> 11(1)
//   4(6)  -> 12(3), 13(1), 14(1);  12(3) -> 15(1), 16(1)
//   5(10) -> 17(9) -> 18(8) -> 19(7) -> 20(4), 21(2)
//   20(4) -> 22(2), 23(1);  22(2) -> 24(1);  21(2) -> 25(1)
inline WeightedLabelledTree figure_tree() {
  std::vector<NodeId> parents = {kNoNode, 0, 0, 1,  1,  2,  2,  3,  7,  8,  9,  10, 4,
                                 4,      4, 12, 12, 5,  17, 18, 19, 19, 20, 20, 22, 21};
  std::vector<Weight> weights = {0, 1, 1, 2, 2, 2, 2, 3, 4, 5, 6, 7, 3,
                                 3, 3, 4, 4, 3, 4, 5, 6, 6, 7, 7, 8, 7};
  std::vector<Label> labels(26, kNoLabel);
  Label next = 1;
  for (NodeId leaf : {6, 11, 13, 14, 15, 16, 23, 24, 25}) labels[leaf] = next++;
  return WeightedLabelledTree::from_parents(std::move(parents), std::move(weights),
                                            std::move(labels));
}

}  // namespace hia::testing
