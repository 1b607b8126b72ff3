#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>

#include "addcomb/bigint.hpp"
#include "addcomb/intset.hpp"
#include "addcomb/lattice.hpp"

namespace addcomb {

/// Deterministic pseudo-random source: mt19937_64 plus hand-rolled rejection
/// sampling, so identical seeds give identical corpora on every platform and
/// standard library. The algorithm name is recorded in report headers.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64+rejection";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [lo, hi], inclusive.
  long long range(long long lo, long long hi);

 private:
  std::mt19937_64 engine_;
};

/// Parameterized deterministic set generator.
///
/// Kinds and parameters:
///   ap             start, step, len          arithmetic progression (IntSet)
///   gp             start, ratio, len         geometric progression (IntSet)
///   cube           d [, side=2]              {0..side-1}^d (LatticeSet)
///   random_lattice d, count, bound           seeded points in [0,bound]^d
///   random_int     count, bound              seeded integers in [1,bound]
///   smooth_box     p, e                      full exponent box over primes <= p
///   dilate_union   len, q1, q2               q1*B union q2*B for B = {0..len-1}
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, long long> params;
  std::uint64_t seed = 0;

  void validate() const;

  /// "kind:key=value,key=value". Seed is given separately or as seed=.
  /// The parsed spec is validated: unknown kinds, unknown parameters, and
  /// missing required parameters all raise std::invalid_argument.
  static GeneratorSpec parse(const std::string& text);
  std::string str() const;
};

/// Integer set or lattice set, depending on the generator kind.
struct GeneratedSet {
  std::variant<IntSet, LatticeSet> value;

  bool is_lattice() const { return value.index() == 1; }
  const IntSet& ints() const { return std::get<IntSet>(value); }
  const LatticeSet& lattice() const { return std::get<LatticeSet>(value); }
};

GeneratedSet generate(const GeneratorSpec& spec,
                      std::size_t max_points = kDefaultMaxPoints);

// Direct corpus helpers (the named generators above route through these).
IntSet ap_set(const Int& start, const Int& step, unsigned long len);
IntSet gp_set(const Int& start, const Int& ratio, unsigned long len);
IntSet random_int_set(Rng& rng, std::size_t count, long long bound);
LatticeSet random_lattice_set(Rng& rng, int dimension, std::size_t count,
                              long long coord_bound);

}  // namespace addcomb
