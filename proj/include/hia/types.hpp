#pragma once

#include <cstdint>

namespace hia {

using NodeId = std::int32_t;
using Label = std::int64_t;
using Weight = std::uint64_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr Label kNoLabel = 0;

// A pair of nodes (one per tree) together with their combined weight.
// Used for full, restricted and brute-force query answers alike.
struct PairAnswer {
  NodeId u1 = kNoNode;
  NodeId u2 = kNoNode;
  Weight total = 0;
};

inline bool operator==(const PairAnswer& a, const PairAnswer& b) {
  return a.u1 == b.u1 && a.u2 == b.u2 && a.total == b.total;
}

}  // namespace hia
