#pragma once

#include <cstddef>
#include <vector>

#include "addcomb/bigint.hpp"

namespace addcomb {

/// Finite set of integers, stored sorted and duplicate-free.
class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::vector<Int> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Int& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Int>& elements() const { return elements_; }

  bool contains(const Int& v) const;

  IntSet unions(const IntSet& other) const;
  IntSet set_minus(const IntSet& other) const;
  bool disjoint_from(const IntSet& other) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const IntSet&) const = default;

 private:
  std::vector<Int> elements_;
};

/// {a + b : a in A, b in B}. Throws ResourceLimitError past `max_points`
/// distinct values; throws std::invalid_argument on an empty operand.
IntSet sumset(const IntSet& a, const IntSet& b, std::size_t max_points = kDefaultMaxPoints);

/// The k-fold sumset A + A + ... + A (k >= 1 copies).
IntSet iterated_sumset(const IntSet& a, unsigned long k,
                       std::size_t max_points = kDefaultMaxPoints);

/// {x * y : x in X, y in Y}.
IntSet product_set(const IntSet& x, const IntSet& y,
                   std::size_t max_points = kDefaultMaxPoints);

/// The k-fold product set X^{(k)} (k >= 1 copies).
IntSet iterated_product(const IntSet& x, unsigned long k,
                        std::size_t max_points = kDefaultMaxPoints);

/// Sizes and doubling ratios of a set: K+ = |A+A|/|A| and K* = |AA|/|A|.
struct DoublingStats {
  Int size;
  Int sumset_size;
  Int product_size;
  Rat k_plus;
  Rat k_star;
};

DoublingStats doubling_stats(const IntSet& a, std::size_t max_points = kDefaultMaxPoints);

}  // namespace addcomb
