#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace addcomb {

// Arbitrary-precision integer / rational. All set arithmetic and all
// inequality verification in this library is carried out on these types;
// there is no floating point anywhere in the computation paths.
using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation would materialize more points than the
/// configured cap allows.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an inequality that must hold by construction fails.
/// Indicates a bug in this library, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Default cap on the number of points an intermediate set may hold.
inline constexpr std::size_t kDefaultMaxPoints = 10'000'000;

std::size_t hash_int(const Int& v) noexcept;
std::size_t hash_point(std::span<const Int> coords) noexcept;

Int pow_int(const Int& base, unsigned long exp);
Int pow_ui(unsigned long base, unsigned long exp);

/// Int from a 64-bit count. gmpxx offers no long long constructor, and on
/// this platform counts always fit a long.
inline Int int_from(long long v) { return Int(static_cast<long>(v)); }

/// Builds a canonical rational from a possibly non-reduced fraction.
Rat make_rat(const Int& num, const Int& den);

/// "n" for integers, "p/q" otherwise. Never a decimal expansion.
std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

}  // namespace addcomb
