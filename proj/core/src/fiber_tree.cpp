#include "addcomb/fiber_tree.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace addcomb {

FiberTree build_fiber_tree(const LatticeSet& a) {
  if (a.empty()) throw std::invalid_argument("build_fiber_tree: empty set");
  FiberTree out;
  out.points = a;
  const int d = a.dimension();

  struct Frame {
    int node;
    std::vector<std::size_t> members;  // point indices, lex-ascending
    int next_coord;                    // 1-based; coords below are constant here
  };
  std::vector<Frame> work;
  {
    std::vector<std::size_t> all(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
    work.push_back({out.tree.root(), std::move(all), 1});
  }
  while (!work.empty()) {
    Frame f = std::move(work.back());
    work.pop_back();
    // Minimal non-constant coordinate. Coordinates before next_coord are
    // constant on this fiber by construction.
    int split = 0;
    for (int j = f.next_coord; j <= d && split == 0; ++j) {
      const Int& first = a.coord(f.members.front(), j);
      for (std::size_t i : f.members) {
        if (a.coord(i, j) != first) {
          split = j;
          break;
        }
      }
    }
    if (split == 0) {
      if (f.members.size() != 1) {
        throw InvariantViolation("build_fiber_tree: duplicate points survived");
      }
      out.tree.node(f.node).point_index = static_cast<int>(f.members.front());
      continue;
    }
    std::map<Int, std::vector<std::size_t>> groups;
    for (std::size_t i : f.members) groups[a.coord(i, split)].push_back(i);
    // Push in reverse so children pop (and get ids) in ascending value order.
    std::vector<Frame> batch;
    for (auto& [value, members] : groups) {
      const int child = out.tree.add_child(f.node);
      out.tree.node(child).coord = split;
      out.tree.node(child).label_value = value;
      batch.push_back({child, std::move(members), split + 1});
    }
    for (auto it = batch.rbegin(); it != batch.rend(); ++it) work.push_back(std::move(*it));
  }
  out.tree.finalize();
  if (out.tree.leaf_count() != static_cast<int>(a.size())) {
    throw InvariantViolation("build_fiber_tree: leaf/point count mismatch");
  }
  return out;
}

std::size_t leaf_point_index(const FiberTree& t, int leaf_node) {
  const TreeNode& n = t.tree.node(leaf_node);
  if (!t.tree.is_leaf(leaf_node) || n.point_index < 0) {
    throw std::invalid_argument("leaf_point_index: node is not a point-carrying leaf");
  }
  return static_cast<std::size_t>(n.point_index);
}

namespace {

void dump_rec(const Tree& t, const LatticeSet* points, int v, int indent,
              std::ostringstream& out) {
  for (int i = 0; i < indent; ++i) out << "  ";
  const TreeNode& n = t.node(v);
  if (v == t.root()) {
    out << "root";
  } else {
    out << "(j=" << n.coord << ", v=" << n.label_value.get_str() << ")";
  }
  if (t.is_leaf(v) && points != nullptr && n.point_index >= 0) {
    out << " -> (";
    auto p = points->point(static_cast<std::size_t>(n.point_index));
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) out << ",";
      out << p[j].get_str();
    }
    out << ")";
  }
  out << "\n";
  for (int c : n.children) dump_rec(t, points, c, indent + 1, out);
}

}  // namespace

std::string dump_fiber_tree(const FiberTree& t) {
  std::ostringstream out;
  dump_rec(t.tree, &t.points, t.tree.root(), 0, out);
  return out.str();
}

std::string dump_tree(const Tree& t) {
  std::ostringstream out;
  dump_rec(t, nullptr, t.root(), 0, out);
  return out.str();
}

}  // namespace addcomb
