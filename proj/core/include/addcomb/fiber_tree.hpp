#pragma once

#include <string>

#include "addcomb/lattice.hpp"
#include "addcomb/tree.hpp"

namespace addcomb {

/// Recursive fibering of a lattice set: each internal node splits its point
/// set on the minimal coordinate that is not constant there, one child per
/// value (ascending). Leaves biject with the points; each leaf stores its
/// point's index in `points`.
struct FiberTree {
  Tree tree;
  LatticeSet points;
};

FiberTree build_fiber_tree(const LatticeSet& a);

/// For a leaf node, the index of its point in t.points.
std::size_t leaf_point_index(const FiberTree& t, int leaf_node);

/// Indented text form, one node per line. Internal edges print their
/// "(j=<coord>, v=<value>)" label; leaf lines carry the full point.
std::string dump_fiber_tree(const FiberTree& t);

/// Same layout for a bare tree (labels only, no points).
std::string dump_tree(const Tree& t);

}  // namespace addcomb
