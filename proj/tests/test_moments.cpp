// Representation functions, additive energy, and the weighted moment engine.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "addcomb/generators.hpp"
#include "addcomb/moments.hpp"

using namespace addcomb;

namespace {

IntSet ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return IntSet(std::move(v));
}

}  // namespace

TEST_CASE("representation function of {0,1,3} at k=2") {
  const RepFunction r = representation_function(ints({0, 1, 3}), 2);
  const std::map<Int, Int> expected = {{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 2}, {6, 1}};
  CHECK(r.counts == expected);
  CHECK(r.total_mass() == 9);
}

TEST_CASE("additive energies frozen by hand enumeration") {
  CHECK(additive_energy(ints({0, 1}), 2) == 6);
  CHECK(additive_energy(ints({0, 1, 3}), 2) == 15);
  CHECK(additive_energy(ints({1, 2, 4, 8}), 2) == 28);
  CHECK(additive_energy(ints({0, 1, 2, 3, 4, 5, 6, 7}), 2) == 344);
  // k = 1: every element is its own unique 1-fold sum.
  CHECK(additive_energy(ints({0, 1, 3}), 1) == 3);
}

TEST_CASE("weighted sets validate and combine") {
  CHECK_THROWS_AS(WeightedSet({{Int(1), Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedSet({{Int(1), Rat(-1, 2)}}), std::invalid_argument);

  const WeightedSet u = WeightedSet::unit(ints({0, 1, 3}));
  CHECK(u.support_size() == 3);
  CHECK(u.weight_square_sum() == 3);
  CHECK_FALSE(u.sq_normalized());

  const WeightedSet half = WeightedSet::unit(ints({0, 1, 2, 3})).scaled(Rat(1, 2));
  CHECK(half.weight_square_sum() == 1);
  CHECK(half.sq_normalized());

  const WeightedSet sum = u.plus(WeightedSet({{Int(1), Rat(2)}}));
  CHECK(sum.entries().at(1) == Rat(3));
  CHECK(sum.support_size() == 3);
}

TEST_CASE("unit-weight moments equal additive energy") {
  for (const IntSet& a : {ints({0, 1}), ints({0, 1, 3}), ints({1, 2, 4, 8})}) {
    for (unsigned long k = 1; k <= 3; ++k) {
      const MomentValue m = weighted_moment(WeightedSet::unit(a), k);
      CHECK(m.k == k);
      CHECK(m.value == Rat(additive_energy(a, k)));
    }
  }
}

TEST_CASE("moments scale with the 2k-th power of the weights") {
  const WeightedSet w = WeightedSet::unit(ints({0, 1})).scaled(Rat(1, 2));
  CHECK(weighted_moment(w, 2).value == Rat(3, 8));
}

TEST_CASE("spectral lower handle is consistent exactly at the threshold") {
  const LambdaLowerHandle h = lambda_lower_estimate(ints({0, 1}), 2);
  CHECK(h.energy == 6);
  CHECK(h.set_size == 2);
  CHECK(h.lambda_pow_k_lower() == Rat(3, 2));
  CHECK(h.consistent_with_upper(Rat(3, 2)));       // 6 <= 4 * (3/2)^2
  CHECK_FALSE(h.consistent_with_upper(Rat(1)));    // 6 <= 4 fails
}

TEST_CASE("k-fold sumset size times energy dominates the size power") {
  const CheckResult two = cauchy_schwarz_check(ints({0, 1}), 2);
  CHECK(two.pass);
  CHECK(two.lhs == Rat(18));
  CHECK(two.rhs == Rat(16));

  const CheckResult ap = cauchy_schwarz_check(ints({0, 1, 2, 3, 4, 5, 6, 7}), 2);
  CHECK(ap.pass);
  CHECK(ap.lhs == Rat(5160));  // 15 * 344
  CHECK(ap.rhs == Rat(4096));
}

TEST_CASE("seeded property: mass and energy identities") {
  Rng rng(2024);
  for (int i = 0; i < 50; ++i) {
    const IntSet a = random_int_set(rng, 1 + rng.below(10), 64);
    for (unsigned long k = 1; k <= 2; ++k) {
      const RepFunction r = representation_function(a, k);
      CHECK(r.total_mass() == pow_int(Int(static_cast<unsigned long>(a.size())), k));
      const Int e = additive_energy(a, k);
      // Diagonal tuples alone contribute |A|^k.
      CHECK(e >= pow_int(Int(static_cast<unsigned long>(a.size())), k));
      CHECK(weighted_moment(WeightedSet::unit(a), k).value == Rat(e));
    }
  }
}
