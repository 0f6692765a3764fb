#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hia/engine.hpp"
#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

// Two tries over a string with anchor positions: one over the reversed
// prefixes ending just before each anchor, one over the suffixes starting at
// each anchor. Node weights equal string depths, so an HIA query over the
// tries yields the longest substring crossing a common anchor. Each anchor's
// string ends in a private sentinel so every anchor owns a distinct leaf.
struct AnchoredText {
  std::string text;                  // 1-indexed positions in the interface
  std::vector<std::int32_t> anchors; // sorted, within [2, |text|]
  WeightedLabelledTree trie_left;
  WeightedLabelledTree trie_right;
  // Transitions by symbol: bytes 0..255 are text characters, values >= 256
  // are per-anchor sentinels.
  std::vector<std::vector<std::pair<std::int32_t, NodeId>>> steps_left;
  std::vector<std::vector<std::pair<std::int32_t, NodeId>>> steps_right;
  HiaIndex index;

  NodeId walk_left(const std::string& context) const;   // deepest match, reversed
  NodeId walk_right(const std::string& context) const;  // deepest match, forward
};

// Throws on an empty anchor set or an anchor outside [2, |text|].
AnchoredText build_anchored(const std::string& text,
                            std::vector<std::int32_t> anchors, int b = 0);

struct CrossingAnswer {
  std::size_t length;
  std::int32_t anchor;
};

// Longest total length of a suffix of left_context plus a prefix of
// right_context that meet at a common anchor of the text.
std::optional<CrossingAnswer> longest_crossing(const AnchoredText& anchored,
                                               const std::string& left_context,
                                               const std::string& right_context);

}  // namespace hia
