#include "addcomb/exactcmp.hpp"

#include <numeric>
#include <stdexcept>

namespace addcomb {

namespace {

// Exact bit length: mpz_sizeinbase is exact in base 2.
unsigned long bit_length(const Int& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

Eps::Eps(unsigned long p, unsigned long q) {
  if (p == 0 || q == 0 || p > q) {
    throw std::invalid_argument("Eps: need 0 < p/q <= 1");
  }
  const unsigned long g = std::gcd(p, q);
  num = p / g;
  den = q / g;
}

std::string Eps::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Eps Eps::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Eps(std::stoul(text), 1);
    }
    return Eps(std::stoul(text.substr(0, slash)), std::stoul(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Eps::parse: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("Eps::parse: value out of range in '" + text + "'");
  }
}

bool pow_le(const Int& a, unsigned long ea, const Int& b, unsigned long eb) {
  if (a < 0 || b < 0) throw std::invalid_argument("pow_le: negative base");
  return pow_int(a, ea) <= pow_int(b, eb);
}

bool pow_ge(const Int& a, unsigned long ea, const Int& b, unsigned long eb) {
  if (a < 0 || b < 0) throw std::invalid_argument("pow_ge: negative base");
  return pow_int(a, ea) >= pow_int(b, eb);
}

unsigned long floor_eps_log2(const Int& n, Eps eps) {
  if (n < 1) throw std::invalid_argument("floor_eps_log2: need n >= 1");
  // Largest t with 2^(t*q) <= n^p, i.e. t*q <= floor(log2 n^p).
  const Int np = pow_int(n, eps.num);
  return (bit_length(np) - 1) / eps.den;
}

bool depth_product_covers(const Int& d, const Int& b, const Int& n, Eps eps) {
  if (d < 0 || b < 0 || n < 0) {
    throw std::invalid_argument("depth_product_covers: negative argument");
  }
  return pow_int(d, eps.num) * pow_int(b, eps.den) >= pow_int(n, eps.num);
}

Log2Bracket log2_bracket(const Rat& x, unsigned long den) {
  if (den == 0) throw std::invalid_argument("log2_bracket: zero denominator");
  if (x <= 0) throw std::invalid_argument("log2_bracket: need x > 0");
  const Int a = pow_int(x.get_num(), den);
  const Int b = pow_int(x.get_den(), den);
  // Largest integer u with 2^u <= a/b.
  Int u;
  bool exact = false;
  if (a >= b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    u = static_cast<long>(bit_length(q)) - 1;
    Int shifted = b;
    mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), u.get_ui());
    exact = (shifted == a);
  } else {
    Int m;
    mpz_cdiv_q(m.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    // Smallest w with 2^w >= m, for integer m >= 2.
    const unsigned long w = bit_length(m - 1);
    u = -static_cast<long>(w);
    Int shifted = a;
    mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), w);
    exact = (shifted == b);
  }
  Log2Bracket out;
  out.lo = make_rat(u, Int(den));
  out.hi = exact ? out.lo : make_rat(u + 1, Int(den));
  out.exact = exact;
  return out;
}

RootLowerBound kth_root_lower(const Rat& x, unsigned long k, unsigned digits) {
  if (k == 0) throw std::invalid_argument("kth_root_lower: k must be positive");
  if (x < 0) throw std::invalid_argument("kth_root_lower: negative argument");
  RootLowerBound out;
  if (x == 0) {
    out.value = 0;
    out.exact = true;
    return out;
  }
  const Int scale = pow_ui(10, digits);
  // floor(scale * x^(1/k)) >= root(floor(x * scale^k)) - 1; taking the exact
  // integer k-th root of the floored numerator keeps the bound one-sided.
  Int scaled;
  {
    Int num = x.get_num() * pow_int(scale, k);
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  }
  Int root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
  out.value = make_rat(root, scale);
  Rat check = out.value;
  for (unsigned long i = 1; i < k; ++i) check *= out.value;
  out.exact = (check == x);
  return out;
}

int cmp_pow2(const Rat& lhs, const Int& num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("cmp_pow2: zero denominator");
  if (lhs <= 0) return -1;
  Int a = pow_int(lhs.get_num(), den);
  Int b = pow_int(lhs.get_den(), den);
  if (num >= 0) {
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), num.get_ui());
  } else {
    Int neg = -num;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), neg.get_ui());
  }
  return a == b ? 0 : (a < b ? -1 : 1);
}

}  // namespace addcomb
