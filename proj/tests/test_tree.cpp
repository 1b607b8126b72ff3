// Rooted trees, the subtree DPs, fiber trees, and quasicube certificates.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "addcomb/fiber_tree.hpp"
#include "addcomb/quasicube.hpp"
#include "addcomb/tree.hpp"
#include "addcomb/tree_stats.hpp"

using namespace addcomb;

namespace {

/// Star: one root with `n` leaf children.
Tree star(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t.add_child(t.root());
  t.finalize();
  return t;
}

/// Complete tree of the given arity and depth.
Tree complete(int arity, int depth) {
  Tree t;
  std::vector<int> frontier = {t.root()};
  for (int d = 0; d < depth; ++d) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int c = 0; c < arity; ++c) next.push_back(t.add_child(v));
    }
    frontier = std::move(next);
  }
  t.finalize();
  return t;
}

}  // namespace

TEST_CASE("tree bookkeeping on a small handmade tree") {
  Tree t;
  const int a = t.add_child(t.root());
  const int b = t.add_child(t.root());
  const int c = t.add_child(a);
  const int d = t.add_child(a);
  t.finalize();

  CHECK(t.node_count() == 5);
  CHECK(t.leaf_count() == 3);
  CHECK(t.height() == 2);
  CHECK(t.depth(c) == 2);
  CHECK(t.lca(c, d) == a);
  CHECK(t.lca(c, b) == t.root());
  CHECK(t.leaf_ordinal(c) == 0);
  CHECK(t.leaf_ordinal(b) == 2);
}

TEST_CASE("star trees: binary value 2, one branching level") {
  const Tree t = star(5);
  CHECK(branch_depth(t) == 1);
  CHECK(max_binary_subtree(t).size == 2);
  CHECK(max_low_subtree(t, 0).size == 1);
  CHECK(max_low_subtree(t, 1).size == 5);
  // Lexicographically least witness: the first two leaves.
  CHECK(max_binary_subtree(t).witness.ordinals == std::vector<int>{0, 1});
}

TEST_CASE("complete binary tree keeps every leaf") {
  const Tree t = complete(2, 3);
  CHECK(t.leaf_count() == 8);
  CHECK(branch_depth(t) == 3);
  CHECK(max_binary_subtree(t).size == 8);
  for (int q = 0; q <= 3; ++q) {
    CHECK(max_low_subtree(t, q).size == (1 << q));
  }
}

TEST_CASE("complete ternary depth-2 tree: binary value 4") {
  const Tree t = complete(3, 2);
  CHECK(t.leaf_count() == 9);
  CHECK(max_binary_subtree(t).size == 4);
  CHECK(max_low_subtree(t, 1).size == 3);
  CHECK(max_low_subtree(t, 2).size == 9);

  const BruteForceStats bf = brute_force_tree_stats(t);
  CHECK(bf.binary_max == 4);
  CHECK(bf.low_max[1] == 3);
  CHECK(bf.low_max[2] == 9);
}

TEST_CASE("induced shapes follow the closure semantics") {
  const Tree t = complete(3, 2);
  // Two leaves under the same child: a single branching node.
  const std::vector<int> two = {0, 1};
  const InducedShape s2 = induced_shape(t, two);
  CHECK(s2.leaf_count == 2);
  CHECK(s2.branch_depth == 1);
  CHECK(s2.binary);
  // Four leaves spread across three children of the root: not binary.
  const std::vector<int> four = {0, 3, 6, 7};
  const InducedShape s4 = induced_shape(t, four);
  CHECK(s4.leaf_count == 4);
  CHECK_FALSE(s4.binary);
  CHECK(s4.branch_depth == 2);
}

TEST_CASE("decomposition replay covers the leaf count") {
  const Tree t = complete(3, 2);
  const Eps eps(1, 2);
  const long long b = max_binary_subtree(t, false).size;
  const LeafSubset w = constructive_decompose(t, eps);
  const Int wsize(static_cast<unsigned long>(w.ordinals.size()));
  CHECK(depth_product_covers(wsize, int_from(b), Int(t.leaf_count()), eps));
}

TEST_CASE("seeded property: DPs equal the exhaustive oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomTreeSpec spec;
    spec.nodes = 1 + static_cast<int>(seed % 24);
    spec.max_arity = 2 + static_cast<int>(seed % 3);
    spec.max_depth = 3 + static_cast<int>(seed % 6);
    spec.seed = seed * 7919;
    const Tree t = random_tree(spec);
    if (t.leaf_count() > 14) continue;

    const BruteForceStats bf = brute_force_tree_stats(t);
    const BinarySubtreeResult bin = max_binary_subtree(t);
    REQUIRE(bin.size == bf.binary_max);
    REQUIRE(bin.witness.ordinals == bf.binary_witness.ordinals);
    // The witness really induces a binary tree of the claimed size.
    const InducedShape shape = induced_shape(t, bin.witness.ordinals);
    REQUIRE(shape.binary);
    REQUIRE(shape.leaf_count == bin.size);

    long long prev = 0;
    for (int q = 0; q <= branch_depth(t); ++q) {
      const LowSubtreeResult low = max_low_subtree(t, q);
      REQUIRE(low.size == bf.low_max[q]);
      REQUIRE(low.witness.ordinals == bf.low_witness[q].ordinals);
      REQUIRE(low.size >= prev);  // monotone in the budget
      prev = low.size;
      const InducedShape ls = induced_shape(t, low.witness.ordinals);
      REQUIRE(ls.branch_depth <= q);
      REQUIRE(ls.leaf_count == low.size);
    }
  }
}

TEST_CASE("fiber tree of a three-point set, frozen dump") {
  const LatticeSet a(2, {Int(0), Int(0), Int(0), Int(1), Int(1), Int(5)});
  const FiberTree ft = build_fiber_tree(a);
  CHECK(ft.tree.leaf_count() == 3);
  CHECK(branch_depth(ft.tree) == 2);

  const std::string expected =
      "root\n"
      "  (j=1, v=0)\n"
      "    (j=2, v=0) -> (0,0)\n"
      "    (j=2, v=1) -> (0,1)\n"
      "  (j=1, v=1) -> (1,5)\n";
  CHECK(dump_fiber_tree(ft) == expected);

  // Leaves carry a bijection onto the points, in point order.
  for (int ord = 0; ord < ft.tree.leaf_count(); ++ord) {
    const int leaf = ft.tree.leaves()[ord];
    CHECK(leaf_point_index(ft, leaf) == static_cast<std::size_t>(ord));
  }
}

TEST_CASE("fiber tree of a binary cube is the complete binary tree") {
  const FiberTree ft = build_fiber_tree(lattice_cube(3, 2));
  CHECK(ft.tree.leaf_count() == 8);
  CHECK(branch_depth(ft.tree) == 3);
  CHECK(max_binary_subtree(ft.tree, false).size == 8);
}

TEST_CASE("quasicube certificates: cubes certify, a three-value line does not") {
  for (int d = 1; d <= 4; ++d) {
    const LatticeSet cube = lattice_cube(d, 2);
    const auto cert = quasicube_subset_certificate(cube);
    REQUIRE(cert.has_value());
    CHECK(replay_certificate(cube, *cert));
  }

  const LatticeSet line(1, {Int(0), Int(1), Int(2)});
  CHECK_FALSE(quasicube_subset_certificate(line).has_value());

  // A corrupted certificate must not replay.
  const LatticeSet square = lattice_cube(2, 2);
  auto cert = quasicube_subset_certificate(square);
  REQUIRE(cert.has_value());
  cert->values[0] += 5;
  CHECK_FALSE(replay_certificate(square, *cert));
}

TEST_CASE("every subset of a binary cube certifies") {
  const LatticeSet cube = lattice_cube(4, 2);
  for (unsigned mask = 1; mask < (1u << 16); mask += 257) {
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < 16; ++i) {
      if (mask & (1u << i)) picks.push_back(i);
    }
    const LatticeSet sub = cube.select(picks);
    const auto cert = quasicube_subset_certificate(sub);
    REQUIRE(cert.has_value());
    REQUIRE(replay_certificate(sub, *cert));
  }
}
