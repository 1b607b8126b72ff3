#include "addcomb/tree_stats.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace addcomb {

namespace {

void require_tree(const Tree& t, const char* op) {
  if (!t.finalized()) {
    throw std::logic_error(std::string(op) + ": tree not finalized");
  }
}

}  // namespace

int branch_depth(const Tree& t) {
  require_tree(t, "branch_depth");
  // down[v] = number of branching vertices strictly above v; a leaf itself
  // never branches, so its root-path count is down[leaf].
  std::vector<int> down(t.node_count(), 0);
  int best = 0;
  for (int v = 1; v < t.node_count(); ++v) {
    const int p = t.node(v).parent;
    down[v] = down[p] + (t.node(p).children.size() >= 2 ? 1 : 0);
  }
  for (int leaf : t.leaves()) best = std::max(best, down[leaf]);
  return best;
}

namespace {

// Scratch buffers for repeated induced-shape computations on one tree.
// Arrays are node-indexed and reset lazily via the visited list.
struct InducedScratch {
  std::vector<int> parent_of;
  std::vector<int> child_count;
  std::vector<int> bd;
  std::vector<int> touched;
  std::vector<int> stack;
  std::vector<int> vnodes;

  explicit InducedScratch(int nodes)
      : parent_of(nodes, -1), child_count(nodes, 0), bd(nodes, 0) {}

  void reset() {
    for (int v : touched) {
      parent_of[v] = -1;
      child_count[v] = 0;
      bd[v] = 0;
    }
    touched.clear();
    stack.clear();
    vnodes.clear();
  }
};

// LCA-closure of the given leaf nodes (ascending tin order expected).
// Fills scratch with the virtual tree and returns its shape.
InducedShape closure_shape(const Tree& t, std::span<const int> leaf_nodes,
                           InducedScratch& s) {
  InducedShape out;
  out.leaf_count = static_cast<int>(leaf_nodes.size());
  if (leaf_nodes.empty()) return out;
  s.reset();
  auto note = [&](int v) {
    s.vnodes.push_back(v);
    s.touched.push_back(v);
  };
  s.stack.push_back(leaf_nodes[0]);
  note(leaf_nodes[0]);
  for (std::size_t i = 1; i < leaf_nodes.size(); ++i) {
    const int u = leaf_nodes[i];
    const int l = t.lca(s.stack.back(), u);
    if (l != s.stack.back()) {
      int child = s.stack.back();
      s.stack.pop_back();
      while (!s.stack.empty() && t.depth(s.stack.back()) > t.depth(l)) {
        s.parent_of[child] = s.stack.back();
        child = s.stack.back();
        s.stack.pop_back();
      }
      if (s.stack.empty() || s.stack.back() != l) {
        s.stack.push_back(l);
        note(l);
      }
      s.parent_of[child] = l;
    }
    s.stack.push_back(u);
    note(u);
  }
  while (s.stack.size() > 1) {
    const int c = s.stack.back();
    s.stack.pop_back();
    s.parent_of[c] = s.stack.back();
  }
  for (int v : s.vnodes) {
    if (s.parent_of[v] >= 0) ++s.child_count[s.parent_of[v]];
  }
  // Ancestors have smaller preorder stamps, so tin order is parent-first.
  std::sort(s.vnodes.begin(), s.vnodes.end(),
            [&](int a, int b) { return t.tin(a) < t.tin(b); });
  out.branch_depth = 0;
  out.binary = true;
  for (int v : s.vnodes) {
    const int p = s.parent_of[v];
    if (p >= 0) s.bd[v] = s.bd[p] + (s.child_count[p] >= 2 ? 1 : 0);
    if (s.child_count[v] > 2) out.binary = false;
    if (s.child_count[v] == 0) out.branch_depth = std::max(out.branch_depth, s.bd[v]);
  }
  return out;
}

std::vector<int> ordinals_to_leaf_nodes(const Tree& t, std::span<const int> ordinals) {
  const auto& leaves = t.leaves();
  std::vector<int> nodes;
  nodes.reserve(ordinals.size());
  int prev = -1;
  for (int o : ordinals) {
    if (o < 0 || o >= static_cast<int>(leaves.size())) {
      throw std::out_of_range("leaf ordinal out of range");
    }
    if (o <= prev) throw std::invalid_argument("leaf ordinals must be strictly ascending");
    prev = o;
    nodes.push_back(leaves[o]);
  }
  return nodes;
}

}  // namespace

InducedShape induced_shape(const Tree& t, std::span<const int> leaf_ordinals) {
  require_tree(t, "induced_shape");
  const std::vector<int> nodes = ordinals_to_leaf_nodes(t, leaf_ordinals);
  InducedScratch scratch(t.node_count());
  return closure_shape(t, nodes, scratch);
}

// ---------------------------------------------------------------------------
// Binary-subtree DP.
//
// b(leaf) = 1; b(v) = max( max_i b(c_i), max_{i<j} b(c_i)+b(c_j) ).
// A closed leaf subset meeting >= 3 children of v makes v a >2-degree node,
// so optima draw from at most two children, each contributing its own
// optimum. Witnesses: leaf DFS ranges of distinct children are disjoint and
// increasing, so the lexicographically smallest optimum starts in the
// smallest child that participates in any optimum; within a pair, both parts
// are forced to their full per-child optima, making the lex-min concat the
// concat of per-child lex-mins.
// ---------------------------------------------------------------------------

std::vector<long long> binary_subtree_values(const Tree& t) {
  require_tree(t, "binary_subtree_values");
  std::vector<long long> b(t.node_count(), 0);
  for (int v = t.node_count() - 1; v >= 0; --v) {
    const auto& ch = t.node(v).children;
    if (ch.empty()) {
      b[v] = 1;
      continue;
    }
    long long best = 0, top1 = 0, top2 = 0;
    for (int c : ch) {
      best = std::max(best, b[c]);
      if (b[c] >= top1) {
        top2 = top1;
        top1 = b[c];
      } else {
        top2 = std::max(top2, b[c]);
      }
    }
    if (ch.size() >= 2) best = std::max(best, top1 + top2);
    b[v] = best;
  }
  return b;
}

namespace {

void binary_witness_rec(const Tree& t, const std::vector<long long>& b, int v,
                        long long target, std::vector<int>& out) {
  while (true) {
    if (t.is_leaf(v)) {
      out.push_back(t.leaf_ordinal(v));
      return;
    }
    const auto& ch = t.node(v).children;
    // First child that can lead an optimal witness wins lexicographically.
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (b[ch[i]] == target) {
        v = ch[i];  // single-child optimum; descend without emitting
        goto descended;
      }
      const long long need = target - b[ch[i]];
      if (need <= 0) continue;
      for (std::size_t j = i + 1; j < ch.size(); ++j) {
        if (b[ch[j]] == need) {
          binary_witness_rec(t, b, ch[i], b[ch[i]], out);
          binary_witness_rec(t, b, ch[j], need, out);
          return;
        }
      }
    }
    throw InvariantViolation("binary witness: no decision reproduces the DP value");
  descended:;
  }
}

}  // namespace

BinarySubtreeResult max_binary_subtree(const Tree& t, bool want_witness) {
  require_tree(t, "max_binary_subtree");
  const std::vector<long long> b = binary_subtree_values(t);
  BinarySubtreeResult out;
  out.size = b[t.root()];
  if (want_witness) {
    out.witness.ordinals.reserve(static_cast<std::size_t>(out.size));
    binary_witness_rec(t, b, t.root(), out.size, out.witness.ordinals);
    if (static_cast<long long>(out.witness.ordinals.size()) != out.size) {
      throw InvariantViolation("binary witness size mismatch");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Low-subtree DP.
//
// D(leaf, q) = 1.
// D(v, q) = max( max_i D(c_i, q),                    — v not in the closure
//                [q >= 1] sum_i D(c_i, q-1) )        — v branches, all in
// Taking >= 2 children charges one unit of branching depth at v; all parts
// then live under budget q-1. Partial unions are dominated because every
// child contributes at least one leaf.
// ---------------------------------------------------------------------------

namespace {

// values[q][v] for q = 0..budget.
std::vector<std::vector<long long>> low_values(const Tree& t, int budget) {
  std::vector<std::vector<long long>> d(budget + 1,
                                        std::vector<long long>(t.node_count(), 0));
  for (int v = t.node_count() - 1; v >= 0; --v) {
    const auto& ch = t.node(v).children;
    if (ch.empty()) {
      for (int q = 0; q <= budget; ++q) d[q][v] = 1;
      continue;
    }
    for (int q = 0; q <= budget; ++q) {
      long long best = 0;
      for (int c : ch) best = std::max(best, d[q][c]);
      if (q >= 1 && ch.size() >= 2) {
        long long total = 0;
        for (int c : ch) total += d[q - 1][c];
        best = std::max(best, total);
      }
      d[q][v] = best;
    }
  }
  return d;
}

void low_witness_rec(const Tree& t, const std::vector<std::vector<long long>>& d, int v,
                     int q, std::vector<int>& out) {
  if (t.is_leaf(v)) {
    out.push_back(t.leaf_ordinal(v));
    return;
  }
  const auto& ch = t.node(v).children;
  const long long target = d[q][v];
  int single = -1;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (d[q][ch[i]] == target) {
      single = static_cast<int>(i);
      break;
    }
  }
  bool union_ok = false;
  if (q >= 1 && ch.size() >= 2) {
    long long total = 0;
    for (int c : ch) total += d[q - 1][c];
    union_ok = (total == target);
  }
  if (single == -1 && !union_ok) {
    throw InvariantViolation("low witness: no decision reproduces the DP value");
  }
  if (single == -1) {
    for (int c : ch) low_witness_rec(t, d, c, q - 1, out);
    return;
  }
  if (!union_ok || single > 0) {
    // A union witness starts inside the first child; a single-child witness
    // from a later child cannot be lexicographically smaller than it.
    if (union_ok && single > 0) {
      for (int c : ch) low_witness_rec(t, d, c, q - 1, out);
    } else {
      low_witness_rec(t, d, ch[single], q, out);
    }
    return;
  }
  // Both candidates begin in child 0: materialize and compare.
  std::vector<int> a, b;
  low_witness_rec(t, d, ch[0], q, a);
  for (int c : ch) low_witness_rec(t, d, c, q - 1, b);
  const auto& pick =
      std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? a : b;
  out.insert(out.end(), pick.begin(), pick.end());
}

}  // namespace

LowSubtreeResult max_low_subtree(const Tree& t, int budget, bool want_witness) {
  require_tree(t, "max_low_subtree");
  if (budget < 0) throw std::invalid_argument("max_low_subtree: negative budget");
  const auto d = low_values(t, budget);
  LowSubtreeResult out;
  out.budget = budget;
  out.size = d[budget][t.root()];
  if (want_witness) {
    out.witness.ordinals.reserve(static_cast<std::size_t>(out.size));
    low_witness_rec(t, d, t.root(), budget, out.witness.ordinals);
    if (static_cast<long long>(out.witness.ordinals.size()) != out.size) {
      throw InvariantViolation("low witness size mismatch");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructive decomposition: replay of the small/big-child induction.
// ---------------------------------------------------------------------------

namespace {

struct DecomposeCtx {
  const Tree& t;
  const std::vector<long long>& b;
  const std::vector<long long>& leaf_cnt;
  Eps eps;
};

// Leaf count of every subtree.
std::vector<long long> subtree_leaf_counts(const Tree& t) {
  std::vector<long long> n(t.node_count(), 0);
  for (int v = t.node_count() - 1; v >= 0; --v) {
    const auto& ch = t.node(v).children;
    if (ch.empty()) {
      n[v] = 1;
    } else {
      for (int c : ch) n[v] += n[c];
    }
  }
  return n;
}

void check_guarantee(const DecomposeCtx& ctx, int v, long long got) {
  // got^p * b(v)^q >= N_v^p — the powered form of got * b^(1/eps) >= N.
  if (!depth_product_covers(int_from(got), int_from(ctx.b[v]), int_from(ctx.leaf_cnt[v]), ctx.eps)) {
    throw InvariantViolation("constructive decomposition lost the size guarantee");
  }
}

// Child is small when N_child <= 2^(-1/eps) * N_v, i.e. N_child^p * 2^q <= N_v^p.
bool is_small(const DecomposeCtx& ctx, int child, int v) {
  Int lhs = pow_int(int_from(ctx.leaf_cnt[child]), ctx.eps.num);
  mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), ctx.eps.den);
  return lhs <= pow_int(int_from(ctx.leaf_cnt[v]), ctx.eps.num);
}

void decompose_rec(const DecomposeCtx& ctx, int v, std::vector<int>& out) {
  // Unary chains never branch; walk through them.
  while (!ctx.t.is_leaf(v) && ctx.t.node(v).children.size() == 1) {
    v = ctx.t.node(v).children[0];
  }
  if (ctx.t.is_leaf(v)) {
    out.push_back(ctx.t.leaf_ordinal(v));
    return;
  }
  const auto& ch = ctx.t.node(v).children;
  std::vector<int> big;
  for (int c : ch) {
    if (!is_small(ctx, c, v)) big.push_back(c);
  }
  const std::size_t before = out.size();
  if (big.empty()) {
    // Every child is small: union of the recursive witnesses. The one
    // branching unit spent at v is funded by each child being a factor
    // 2^(1/eps) smaller.
    for (int c : ch) decompose_rec(ctx, c, out);
  } else if (big.size() >= 2) {
    // Two big children force b(v) >= 2*min(big b): descend into the big
    // child of smallest binary value (ties: smallest id, i.e. first listed).
    int pick = big[0];
    for (int c : big) {
      if (ctx.b[c] < ctx.b[pick]) pick = c;
    }
    decompose_rec(ctx, pick, out);
  } else {
    // Single big child: its witness usually suffices; when it misses the
    // target against b(v), the small children together must reach it.
    std::vector<int> from_big;
    decompose_rec(ctx, big[0], from_big);
    if (depth_product_covers(int_from(static_cast<long long>(from_big.size())),
                             int_from(ctx.b[v]), int_from(ctx.leaf_cnt[v]), ctx.eps)) {
      out.insert(out.end(), from_big.begin(), from_big.end());
      std::sort(out.begin() + static_cast<long>(before), out.end());
      check_guarantee(ctx, v, static_cast<long long>(out.size() - before));
      return;
    }
    for (int c : ch) {
      if (c != big[0]) decompose_rec(ctx, c, out);
    }
  }
  std::sort(out.begin() + static_cast<long>(before), out.end());
  check_guarantee(ctx, v, static_cast<long long>(out.size() - before));
}

}  // namespace

LeafSubset constructive_decompose(const Tree& t, Eps eps) {
  require_tree(t, "constructive_decompose");
  const std::vector<long long> b = binary_subtree_values(t);
  const std::vector<long long> n = subtree_leaf_counts(t);
  DecomposeCtx ctx{t, b, n, eps};
  LeafSubset out;
  decompose_rec(ctx, t.root(), out.ordinals);
  std::sort(out.ordinals.begin(), out.ordinals.end());
  // Whole-tree postconditions: the guarantee against b(T) and the branching
  // budget floor(eps * log2 N).
  check_guarantee(ctx, t.root(), static_cast<long long>(out.ordinals.size()));
  const unsigned long budget = floor_eps_log2(int_from(t.leaf_count()), eps);
  const InducedShape shape = induced_shape(t, out.ordinals);
  if (shape.branch_depth > static_cast<int>(budget)) {
    throw InvariantViolation("constructive decomposition exceeded its branching budget");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.
// ---------------------------------------------------------------------------

BruteForceStats brute_force_tree_stats(const Tree& t) {
  require_tree(t, "brute_force_tree_stats");
  const int L = t.leaf_count();
  if (L > 14) {
    throw std::invalid_argument("brute_force_tree_stats: more than 14 leaves");
  }
  const int max_bd = branch_depth(t);
  BruteForceStats out;
  out.low_max.assign(max_bd + 1, 0);
  out.low_witness.assign(max_bd + 1, {});
  std::vector<std::vector<int>> bucket_witness(max_bd + 1);
  std::vector<long long> bucket_max(max_bd + 1, 0);

  InducedScratch scratch(t.node_count());
  std::vector<int> nodes;
  std::vector<int> ords;
  nodes.reserve(L);
  ords.reserve(L);
  const auto& leaves = t.leaves();

  auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };

  for (unsigned mask = 1; mask < (1u << L); ++mask) {
    nodes.clear();
    ords.clear();
    for (int i = 0; i < L; ++i) {
      if (mask & (1u << i)) {
        ords.push_back(i);
        nodes.push_back(leaves[i]);
      }
    }
    const InducedShape shape = closure_shape(t, nodes, scratch);
    const long long sz = shape.leaf_count;
    if (shape.binary) {
      if (sz > out.binary_max ||
          (sz == out.binary_max && lex_less(ords, out.binary_witness.ordinals))) {
        out.binary_max = sz;
        out.binary_witness.ordinals = ords;
      }
    }
    const int bd = shape.branch_depth;
    if (sz > bucket_max[bd] || (sz == bucket_max[bd] && lex_less(ords, bucket_witness[bd]))) {
      bucket_max[bd] = sz;
      bucket_witness[bd] = ords;
    }
  }
  // low_max[q] aggregates all buckets with branching depth <= q; lex-min
  // among the bucket winners achieving the max.
  for (int q = 0; q <= max_bd; ++q) {
    long long best = 0;
    std::vector<int>* wit = nullptr;
    for (int bd = 0; bd <= q; ++bd) {
      if (bucket_max[bd] > best) {
        best = bucket_max[bd];
        wit = &bucket_witness[bd];
      } else if (bucket_max[bd] == best && wit != nullptr &&
                 lex_less(bucket_witness[bd], *wit)) {
        wit = &bucket_witness[bd];
      }
    }
    out.low_max[q] = best;
    if (wit != nullptr) out.low_witness[q].ordinals = *wit;
  }
  return out;
}

}  // namespace addcomb
