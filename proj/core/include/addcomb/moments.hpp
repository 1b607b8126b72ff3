#pragma once

#include <cstddef>
#include <map>

#include "addcomb/bigint.hpp"
#include "addcomb/check.hpp"
#include "addcomb/intset.hpp"

namespace addcomb {

/// Finitely supported function with strictly positive rational weights.
class WeightedSet {
 public:
  WeightedSet() = default;
  explicit WeightedSet(std::map<Int, Rat> entries);

  /// Indicator weights: every element of `a` gets weight 1.
  static WeightedSet unit(const IntSet& a);

  const std::map<Int, Rat>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rat weight_square_sum() const;
  bool sq_normalized() const { return weight_square_sum() == 1; }

  WeightedSet scaled(const Rat& factor) const;

  /// Pointwise sum; supports may overlap (weights add).
  WeightedSet plus(const WeightedSet& other) const;

  bool operator==(const WeightedSet&) const = default;

 private:
  std::map<Int, Rat> entries_;
};

/// r_k(s) = number of ordered k-tuples of elements of A summing to s.
struct RepFunction {
  unsigned long k = 0;
  std::map<Int, Int> counts;

  Int total_mass() const;  // sum of counts == |A|^k
};

RepFunction representation_function(const IntSet& a, unsigned long k,
                                    std::size_t max_points = kDefaultMaxPoints);

/// E_k(A) = sum over s of r_k(s)^2.
Int additive_energy(const IntSet& a, unsigned long k,
                    std::size_t max_points = kDefaultMaxPoints);

/// The 2k-th moment of a weighted set: sum over s of W_k(s)^2 where W_k is
/// the k-fold weight convolution. Exact rational.
struct MomentValue {
  Rat value;
  unsigned long k = 0;
};

MomentValue weighted_moment(const WeightedSet& w, unsigned long k,
                            std::size_t max_points = kDefaultMaxPoints);

/// Certified lower-bound handle for the k-th spectral constant of a set:
/// the constant's k-th power is at least energy / size^k. The constant
/// itself is irrational in general and never evaluated; consistency with a
/// claimed upper bound B is the exact test energy <= size^k * B^k.
struct LambdaLowerHandle {
  Int energy;
  Int set_size;
  unsigned long k = 0;

  Rat lambda_pow_k_lower() const;
  bool consistent_with_upper(const Rat& bound) const;
};

LambdaLowerHandle lambda_lower_estimate(const IntSet& a, unsigned long k,
                                        std::size_t max_points = kDefaultMaxPoints);

/// |kA| * E_k(A) >= |A|^(2k): the powered form of |kA| >= |A|^(2k)/E_k(A).
CheckResult cauchy_schwarz_check(const IntSet& a, unsigned long k,
                                 std::size_t max_points = kDefaultMaxPoints);

}  // namespace addcomb
