#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hia/tree.hpp"
#include "hia/types.hpp"

namespace hia {

// splitmix64; self-contained so fixed seeds reproduce bit-for-bit across
// compilers and standard libraries.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Uniform random recursive tree: node i attaches to a uniform parent in
// [0, i-1]; weights grow by uniform [1, 10] per edge. Leaves are unlabelled.
WeightedLabelledTree random_recursive_tree(Rng& rng, NodeId n);

// Named adversarial shapes for decomposition edge cases.
WeightedLabelledTree path_tree(NodeId n);
WeightedLabelledTree star_tree(NodeId n);
WeightedLabelledTree caterpillar_tree(NodeId n);
WeightedLabelledTree balanced_binary_tree(NodeId n);

// Labels the leaves of both trees with a random bijection from [1..L];
// requires equal leaf counts.
void assign_label_bijection(Rng& rng, WeightedLabelledTree& t1,
                            WeightedLabelledTree& t2);

// Random pair with a full label bijection: the second shape is resampled
// until its leaf count matches the first.
TreePair random_pair(Rng& rng, NodeId n);

}  // namespace hia
