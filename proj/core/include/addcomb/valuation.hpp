#pragma once

#include <map>
#include <vector>

#include "addcomb/bigint.hpp"
#include "addcomb/intset.hpp"
#include "addcomb/lattice.hpp"

namespace addcomb {

/// Ordered list of distinct primes. Coordinate j of a valuation point is the
/// exponent of primes[j-1].
struct PrimeBasis {
  std::vector<Int> primes;  // ascending, distinct, each > 1 and prime

  void validate() const;
  bool operator==(const PrimeBasis&) const = default;
};

/// Prime factorization by trial division (small primes first, then odd
/// candidates), with a primality check on the remaining cofactor so inputs
/// with a large prime factor still factor at desk scale.
std::map<Int, unsigned long> factorize(const Int& n);

struct ValuationImage {
  LatticeSet points;
  PrimeBasis basis;
};

/// Maps a set of positive integers to its exponent vectors over the primes
/// dividing some element. Multiplication of sets becomes coordinatewise
/// addition of points. A set with no prime content ({1}) gets the smallest
/// usable basis {2} so the image still lives in a 1-dimensional lattice.
ValuationImage valuation_map(const IntSet& x);

/// Exponent vector of a single positive integer over `basis`. Throws
/// std::invalid_argument when a prime outside the basis divides `n`.
std::vector<Int> valuation_point(const Int& n, const PrimeBasis& basis);

/// Product basis[j]^p[j]; inverse of valuation_point. Exponents must be >= 0.
Int element_of_point(std::span<const Int> p, const PrimeBasis& basis);

/// Applies element_of_point to every point.
IntSet valuation_inverse(const LatticeSet& points, const PrimeBasis& basis);

/// Smallest common basis (sorted union of the primes).
PrimeBasis union_basis(const PrimeBasis& a, const PrimeBasis& b);

/// Re-expresses points over a larger basis, inserting zero exponents for the
/// new primes. Every prime of `from` must appear in `to`.
LatticeSet embed_in_basis(const LatticeSet& points, const PrimeBasis& from,
                          const PrimeBasis& to);

/// Primes <= n, ascending (sieve).
std::vector<Int> primes_up_to(unsigned long n);

/// All products of primes <= prime_bound with every exponent <= exponent
/// bound: the full exponent box, of size (E+1)^pi(P).
IntSet smooth_box(unsigned long prime_bound, unsigned long exponent_bound,
                  std::size_t max_points = kDefaultMaxPoints);

}  // namespace addcomb
