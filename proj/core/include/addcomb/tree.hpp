#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "addcomb/bigint.hpp"

namespace addcomb {

struct TreeNode {
  int parent = -1;
  std::vector<int> children;
  // Edge label into this node: the coordinate (1-based) the parent split on
  // and the value this child's subtree takes there. coord == 0 on the root.
  int coord = 0;
  Int label_value;
  // Fiber trees: index of the carried point in the source set (leaves only).
  int point_index = -1;
};

/// Rooted tree held in an arena. Node 0 is the root and children always have
/// larger ids than their parent, so a single forward (resp. backward) sweep
/// is a top-down (resp. bottom-up) traversal. Immutable after finalize().
class Tree {
 public:
  Tree();

  int add_child(int parent);
  TreeNode& node(int v) { return nodes_[v]; }
  const TreeNode& node(int v) const { return nodes_[v]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  bool is_leaf(int v) const { return nodes_[v].children.empty(); }

  /// Computes traversal metadata. Must be called once construction is done;
  /// the queries below require it.
  void finalize();
  bool finalized() const { return finalized_; }

  /// Leaves in depth-first order (children visited in stored order).
  const std::vector<int>& leaves() const;
  int leaf_count() const;
  int depth(int v) const;  // root has depth 0
  int tin(int v) const;    // preorder timestamp
  /// Position of node v in leaves(), or -1 when v is internal.
  int leaf_ordinal(int v) const;
  int height() const;

  int lca(int u, int v) const;

 private:
  void require_finalized(const char* op) const;

  std::vector<TreeNode> nodes_;
  bool finalized_ = false;
  std::vector<int> leaves_;
  std::vector<int> depth_;
  std::vector<int> tin_;
  std::vector<int> leaf_ordinal_;
  int height_ = 0;
};

/// Random tree shape: every internal node gets 1..max_arity children until
/// the node budget runs out; depth is capped. Deterministic in the seed.
struct RandomTreeSpec {
  int nodes = 1;
  int max_arity = 3;
  int max_depth = 12;
  std::uint64_t seed = 0;
};

Tree random_tree(const RandomTreeSpec& spec);

}  // namespace addcomb
