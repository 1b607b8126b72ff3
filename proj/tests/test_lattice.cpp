// Integer sets, lattice sets, and the exact comparison helpers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "addcomb/exactcmp.hpp"
#include "addcomb/intset.hpp"
#include "addcomb/lattice.hpp"

using namespace addcomb;

namespace {

IntSet ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return IntSet(std::move(v));
}

}  // namespace

TEST_CASE("integer sets sort and deduplicate") {
  const IntSet a = ints({3, 1, 3, 0, 1});
  CHECK(a.size() == 3);
  CHECK(a.elements() == std::vector<Int>{0, 1, 3});
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
}

TEST_CASE("sumset of a small set matches the hand enumeration") {
  const IntSet a = ints({0, 1, 3});
  CHECK(sumset(a, a) == ints({0, 1, 2, 3, 4, 6}));
  CHECK(iterated_sumset(a, 1) == a);
  CHECK(iterated_sumset(ints({0, 1}), 3) == ints({0, 1, 2, 3}));
}

TEST_CASE("sumset rejects empty operands and oversized results") {
  CHECK_THROWS_AS(sumset(IntSet{}, ints({1})), std::invalid_argument);
  const IntSet big = ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK_THROWS_AS(sumset(big, big, 5), ResourceLimitError);
}

TEST_CASE("doubling statistics of a geometric progression") {
  const IntSet a = ints({1, 2, 4, 8});
  const DoublingStats ds = doubling_stats(a);
  CHECK(ds.size == 4);
  CHECK(ds.sumset_size == 10);
  CHECK(ds.product_size == 7);
  CHECK(ds.k_plus == Rat(5, 2));
  CHECK(ds.k_star == Rat(7, 4));
}

TEST_CASE("set algebra helpers") {
  const IntSet a = ints({1, 2, 3});
  const IntSet b = ints({3, 4});
  CHECK(a.unions(b) == ints({1, 2, 3, 4}));
  CHECK(a.set_minus(b) == ints({1, 2}));
  CHECK_FALSE(a.disjoint_from(b));
  CHECK(a.set_minus(b).disjoint_from(b));
  CHECK(product_set(a, b) == ints({3, 4, 6, 8, 9, 12}));
  CHECK(iterated_product(ints({1, 2}), 3) == ints({1, 2, 4, 8}));
}

TEST_CASE("lattice sets store points sorted by coordinates") {
  const LatticeSet a(2, {Int(1), Int(5), Int(0), Int(0), Int(0), Int(1)});
  CHECK(a.size() == 3);
  CHECK(a.dimension() == 2);
  CHECK(a.point(0)[0] == 0);
  CHECK(a.point(0)[1] == 0);
  CHECK(a.point(2)[0] == 1);
  CHECK(a.point(2)[1] == 5);
  CHECK_THROWS_AS(LatticeSet(2, {Int(1)}), std::invalid_argument);
}

TEST_CASE("lattice sumset and cube") {
  const LatticeSet a(2, {Int(0), Int(0), Int(0), Int(1)});
  const LatticeSet s = sumset(a, a);
  CHECK(s.size() == 3);
  CHECK(s.point(2)[1] == 2);

  const LatticeSet cube = lattice_cube(2, 2);
  CHECK(cube.size() == 4);
  CHECK(cube.dimension() == 2);
  const std::vector<std::size_t> picks = {0, 3};
  const LatticeSet sub = cube.select(picks);
  CHECK(sub.size() == 2);
  CHECK(sub.point(1)[0] == 1);
  CHECK(sub.point(1)[1] == 1);
}

TEST_CASE("epsilon is a validated rational in (0, 1]") {
  CHECK(Eps(1, 2).str() == "1/2");
  CHECK(Eps::parse("3/4").num == 3);
  CHECK(Eps::parse("1").den == 1);
  CHECK_THROWS_AS(Eps(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Eps(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Eps::parse("x/y"), std::invalid_argument);
}

TEST_CASE("budget arithmetic never rounds the wrong way") {
  CHECK(floor_eps_log2(Int(8), Eps(1, 1)) == 3);
  CHECK(floor_eps_log2(Int(8), Eps(1, 2)) == 1);
  CHECK(floor_eps_log2(Int(9), Eps(1, 2)) == 1);
  CHECK(floor_eps_log2(Int(1024), Eps(3, 4)) == 7);
  CHECK(floor_eps_log2(Int(1), Eps(1, 2)) == 0);

  CHECK(depth_product_covers(Int(2), Int(4), Int(8), Eps(1, 2)));
  CHECK_FALSE(depth_product_covers(Int(1), Int(1), Int(2), Eps(1, 1)));
}

TEST_CASE("cross-powered comparisons") {
  CHECK(pow_le(Int(2), 10, Int(3), 7));       // 1024 <= 2187
  CHECK_FALSE(pow_ge(Int(2), 10, Int(3), 7));
  CHECK(pow_ge(Int(5), 2, Int(5), 2));
}

TEST_CASE("log2 brackets are certified on both ends") {
  const Log2Bracket b8 = log2_bracket(Rat(8), 1);
  CHECK(b8.exact);
  CHECK(b8.lo == Rat(3));
  CHECK(b8.hi == Rat(3));

  const Log2Bracket b3 = log2_bracket(Rat(3), 2);
  CHECK_FALSE(b3.exact);
  CHECK(b3.lo == Rat(3, 2));
  CHECK(b3.hi == Rat(2));
  // The endpoints really bracket: 2^3 <= 3^2 and 3^2 <= 2^4.
  CHECK(cmp_pow2(Rat(3), 3, 2) >= 0);
  CHECK(cmp_pow2(Rat(3), 4, 2) <= 0);
}

TEST_CASE("certified k-th root lower bounds") {
  const RootLowerBound cube = kth_root_lower(Rat(8), 3, 9);
  CHECK(cube.exact);
  CHECK(cube.value == Rat(2));

  const RootLowerBound sqrt2 = kth_root_lower(Rat(2), 2, 9);
  CHECK_FALSE(sqrt2.exact);
  CHECK(sqrt2.value * sqrt2.value <= 2);
  CHECK(sqrt2.value >= Rat(1414213562, 1000000000));
}

TEST_CASE("comparison against powers of two") {
  CHECK(cmp_pow2(Rat(8), Int(3), 1) == 0);
  CHECK(cmp_pow2(Rat(9), Int(3), 1) == 1);
  CHECK(cmp_pow2(Rat(7), Int(3), 1) == -1);
  CHECK(cmp_pow2(Rat(1, 2), Int(-1), 1) == 0);
}
