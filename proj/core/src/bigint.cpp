#include "addcomb/bigint.hpp"

#include <stdexcept>

namespace addcomb {

namespace {

// FNV-1a over the limb representation plus sign. Limbs are read through the
// raw mpz struct so hashing never allocates.
std::size_t mix_limbs(std::size_t h, const mpz_srcptr z) noexcept {
  constexpr std::size_t kPrime = 1099511628211ULL;
  const int sz = z->_mp_size;
  h = (h ^ static_cast<std::size_t>(sz + 0x7fff)) * kPrime;
  const int n = sz < 0 ? -sz : sz;
  for (int i = 0; i < n; ++i) {
    mp_limb_t limb = z->_mp_d[i];
    h = (h ^ static_cast<std::size_t>(limb)) * kPrime;
#if GMP_LIMB_BITS > 64
    h = (h ^ static_cast<std::size_t>(limb >> 64)) * kPrime;
#endif
  }
  return h;
}

}  // namespace

std::size_t hash_int(const Int& v) noexcept {
  return mix_limbs(1469598103934665603ULL, v.get_mpz_t());
}

std::size_t hash_point(std::span<const Int> coords) noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const Int& c : coords) h = mix_limbs(h, c.get_mpz_t());
  return h;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int pow_ui(unsigned long base, unsigned long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
  Rat out;
  if (out.set_str(s, 10) != 0) {
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  }
  if (out.get_den() == 0) {
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  }
  out.canonicalize();
  return out;
}

}  // namespace addcomb
