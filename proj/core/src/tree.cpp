#include "addcomb/tree.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace addcomb {

Tree::Tree() { nodes_.emplace_back(); }

int Tree::add_child(int parent) {
  if (finalized_) throw std::logic_error("Tree: cannot add children after finalize()");
  if (parent < 0 || parent >= node_count()) {
    throw std::out_of_range("Tree::add_child: bad parent id");
  }
  const int id = node_count();
  nodes_.emplace_back();
  nodes_[id].parent = parent;
  nodes_[parent].children.push_back(id);
  return id;
}

void Tree::finalize() {
  if (finalized_) return;
  const int n = node_count();
  depth_.assign(n, 0);
  tin_.assign(n, 0);
  leaf_ordinal_.assign(n, -1);
  leaves_.clear();
  height_ = 0;
  // Children have larger ids than parents, so ids are already a valid
  // preorder up to sibling interleaving; an explicit stack gives the exact
  // DFS timestamps and leaf order.
  std::vector<int> stack = {root()};
  int clock = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    tin_[v] = clock++;
    if (v != root()) depth_[v] = depth_[nodes_[v].parent] + 1;
    height_ = std::max(height_, depth_[v]);
    if (nodes_[v].children.empty()) {
      leaf_ordinal_[v] = static_cast<int>(leaves_.size());
      leaves_.push_back(v);
    }
    const auto& ch = nodes_[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  finalized_ = true;
}

void Tree::require_finalized(const char* op) const {
  if (!finalized_) {
    throw std::logic_error(std::string("Tree::") + op + ": finalize() not called");
  }
}

const std::vector<int>& Tree::leaves() const {
  require_finalized("leaves");
  return leaves_;
}

int Tree::leaf_count() const {
  require_finalized("leaf_count");
  return static_cast<int>(leaves_.size());
}

int Tree::depth(int v) const {
  require_finalized("depth");
  return depth_[v];
}

int Tree::tin(int v) const {
  require_finalized("tin");
  return tin_[v];
}

int Tree::leaf_ordinal(int v) const {
  require_finalized("leaf_ordinal");
  return leaf_ordinal_[v];
}

int Tree::height() const {
  require_finalized("height");
  return height_;
}

int Tree::lca(int u, int v) const {
  require_finalized("lca");
  while (u != v) {
    if (depth_[u] < depth_[v]) std::swap(u, v);
    u = nodes_[u].parent;
  }
  return u;
}

Tree random_tree(const RandomTreeSpec& spec) {
  if (spec.nodes < 1 || spec.max_arity < 1 || spec.max_depth < 0) {
    throw std::invalid_argument("random_tree: bad spec");
  }
  std::mt19937_64 rng(spec.seed);
  Tree t;
  // Frontier of nodes still allowed to receive children.
  std::vector<int> frontier = {t.root()};
  std::vector<int> depth_of = {0};
  while (t.node_count() < spec.nodes && !frontier.empty()) {
    const std::size_t pick = static_cast<std::size_t>(rng() % frontier.size());
    const int v = frontier[pick];
    const int dv = depth_of[pick];
    frontier[pick] = frontier.back();
    depth_of[pick] = depth_of.back();
    frontier.pop_back();
    depth_of.pop_back();
    const int want = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_arity));
    const int room = spec.nodes - t.node_count();
    const int arity = std::min(want, room);
    for (int i = 0; i < arity; ++i) {
      const int c = t.add_child(v);
      if (dv + 1 < spec.max_depth) {
        frontier.push_back(c);
        depth_of.push_back(dv + 1);
      }
    }
  }
  t.finalize();
  return t;
}

}  // namespace addcomb
