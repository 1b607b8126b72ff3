#pragma once

// Exact comparison helpers. Quantities defined through k-th roots or base-2
// logarithms are never evaluated numerically; every comparison against them
// is cross-powered into an integer inequality, or bracketed between exact
// rationals with a stated denominator.

#include <cstddef>
#include <string>

#include "addcomb/bigint.hpp"

namespace addcomb {

/// A rational accuracy parameter p/q with 0 < p <= q. Powers of the form
/// x^(1/eps) are always handled by raising both sides of a comparison to
/// the q-th resp. p-th power.
struct Eps {
  unsigned long num = 1;
  unsigned long den = 2;

  Eps() = default;
  Eps(unsigned long p, unsigned long q);

  Rat as_rat() const { return make_rat(Int(num), Int(den)); }
  std::string str() const;
  static Eps parse(const std::string& text);  // "p/q" or "p"
};

/// a^ea <= b^eb, all quantities nonnegative.
bool pow_le(const Int& a, unsigned long ea, const Int& b, unsigned long eb);

/// a^ea >= b^eb, all quantities nonnegative.
bool pow_ge(const Int& a, unsigned long ea, const Int& b, unsigned long eb);

/// floor(eps * log2 n) for n >= 1: the largest t >= 0 with 2^(t*q) <= n^p.
unsigned long floor_eps_log2(const Int& n, Eps eps);

/// d^p * b^q >= n^p for eps = p/q; the powered form of d * b^(1/eps) >= n.
bool depth_product_covers(const Int& d, const Int& b, const Int& n, Eps eps);

/// Exact bracket u/den <= log2(x) <= (u+1)/den for x >= 1. When x is an
/// exact power of 2^(1/den) both ends coincide and `exact` is set.
struct Log2Bracket {
  Rat lo;
  Rat hi;
  bool exact = false;
};
Log2Bracket log2_bracket(const Rat& x, unsigned long den);

/// Certified lower bound r >= 0 with r^k <= x, within 10^-digits of the true
/// k-th root. `exact` is set when r^k == x.
struct RootLowerBound {
  Rat value;
  bool exact = false;
};
RootLowerBound kth_root_lower(const Rat& x, unsigned long k, unsigned digits);

/// Compares lhs against 2^e for rational e = num/den (den > 0, num may be
/// negative): returns -1, 0, or 1. Used to decide log2 comparisons exactly.
int cmp_pow2(const Rat& lhs, const Int& num, unsigned long den);

}  // namespace addcomb
