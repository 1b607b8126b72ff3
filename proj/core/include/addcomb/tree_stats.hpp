#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "addcomb/exactcmp.hpp"
#include "addcomb/tree.hpp"

namespace addcomb {

// Throughout this header "subtree" means: pick a subset S of leaves and close
// it under pairwise lowest common ancestors; the induced tree keeps exactly
// the closure nodes, with ancestry inherited. Unary chains collapse, so every
// induced internal node really branches within S. The DPs below compute over
// that semantics; the brute-force oracle enumerates it literally.

/// Sorted leaf ordinals (positions in Tree::leaves()) naming a leaf subset.
struct LeafSubset {
  std::vector<int> ordinals;
};

/// Branching depth: max over leaves of the number of >=2-child nodes strictly
/// counted along the root path (inclusive of any branching node on it).
int branch_depth(const Tree& t);

/// Shape of the tree induced by a leaf subset under LCA closure.
struct InducedShape {
  int leaf_count = 0;
  int branch_depth = 0;
  bool binary = true;  // every induced node has <= 2 induced children
};
InducedShape induced_shape(const Tree& t, std::span<const int> leaf_ordinals);

/// Largest leaf subset whose induced tree is binary. Witness is the
/// lexicographically smallest optimal subset (by leaf ordinal sequence).
struct BinarySubtreeResult {
  long long size = 0;
  LeafSubset witness;
};
BinarySubtreeResult max_binary_subtree(const Tree& t, bool want_witness = true);

/// Per-node values of the same DP: best binary leaf count inside each
/// node's subtree. Indexed by node id.
std::vector<long long> binary_subtree_values(const Tree& t);

/// Largest leaf subset whose induced tree has branching depth <= budget.
struct LowSubtreeResult {
  long long size = 0;
  int budget = 0;
  LeafSubset witness;
};
LowSubtreeResult max_low_subtree(const Tree& t, int budget, bool want_witness = true);

/// Replays the small/big-child induction of the low-vs-binary alternative:
/// returns a leaf subset W with branching depth <= floor(eps*log2 N) whose
/// size satisfies |W|^p * b(T)^q >= N^p for eps = p/q, N = leaf count.
/// Throws InvariantViolation if the replay ever contradicts itself.
LeafSubset constructive_decompose(const Tree& t, Eps eps);

/// Exhaustive ground truth for trees with <= 14 leaves.
struct BruteForceStats {
  long long binary_max = 0;
  LeafSubset binary_witness;
  /// low_max[q] = best leaf count at branching-depth budget q, for q = 0..
  /// branch_depth(T); values stay flat beyond the last entry.
  std::vector<long long> low_max;
  std::vector<LeafSubset> low_witness;
};
BruteForceStats brute_force_tree_stats(const Tree& t);

}  // namespace addcomb
