#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "addcomb/bigint.hpp"

namespace addcomb {

/// Finite subset of Z^d with a fixed dimension d >= 1. Points are stored in
/// one flat coordinate buffer, sorted lexicographically and duplicate-free.
class LatticeSet {
 public:
  LatticeSet() = default;

  /// `flat` holds size*dimension coordinates, point-major. Sorts and dedupes.
  LatticeSet(int dimension, std::vector<Int> flat);

  static LatticeSet from_points(int dimension, const std::vector<std::vector<Int>>& points);

  int dimension() const { return dimension_; }
  std::size_t size() const { return dimension_ == 0 ? 0 : flat_.size() / dimension_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Int> point(std::size_t i) const {
    return {flat_.data() + i * dimension_, static_cast<std::size_t>(dimension_)};
  }
  std::vector<Int> point_vec(std::size_t i) const;

  /// Coordinate `coord` (1-based) of point i.
  const Int& coord(std::size_t i, int coord) const {
    return flat_[i * dimension_ + (coord - 1)];
  }

  bool contains(std::span<const Int> p) const;
  std::optional<std::size_t> index_of(std::span<const Int> p) const;

  /// New set keeping the points whose indices are listed (indices need not be
  /// sorted; duplicates collapse).
  LatticeSet select(std::span<const std::size_t> indices) const;

  bool operator==(const LatticeSet&) const = default;

 private:
  int dimension_ = 0;
  std::vector<Int> flat_;
};

/// {a + b : a in A, b in B}, coordinatewise. Dimensions must agree.
LatticeSet sumset(const LatticeSet& a, const LatticeSet& b,
                  std::size_t max_points = kDefaultMaxPoints);

LatticeSet iterated_sumset(const LatticeSet& a, unsigned long k,
                           std::size_t max_points = kDefaultMaxPoints);

/// Values taken by coordinate `coord` (1-based), ascending.
std::vector<Int> coordinate_values(const LatticeSet& a, int coord);

/// Partition of A by the value of coordinate `coord` (1-based). Each fiber
/// keeps the full dimension.
std::map<Int, LatticeSet> fibers(const LatticeSet& a, int coord);

/// Cartesian power {0,...,side-1}^dimension.
LatticeSet lattice_cube(int dimension, unsigned long side,
                        std::size_t max_points = kDefaultMaxPoints);

}  // namespace addcomb
