#include "addcomb/valuation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace addcomb {

void PrimeBasis::validate() const {
  if (primes.empty()) throw std::invalid_argument("PrimeBasis: empty basis");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 2 || mpz_probab_prime_p(primes[i].get_mpz_t(), 40) == 0) {
      throw std::invalid_argument("PrimeBasis: entry " + primes[i].get_str() +
                                  " is not prime");
    }
    if (i > 0 && primes[i] <= primes[i - 1]) {
      throw std::invalid_argument("PrimeBasis: primes must be strictly increasing");
    }
  }
}

std::map<Int, unsigned long> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: need n >= 1");
  std::map<Int, unsigned long> out;
  Int rest = n;
  auto strip = [&](const Int& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) out[p] = e;
  };
  strip(Int(2));
  strip(Int(3));
  Int d = 5;
  // Candidates 5, 7, 11, 13, ... (6k +- 1).
  int step = 2;
  while (d * d <= rest && d < 1'000'000) {
    strip(d);
    d += step;
    step = 6 - step;
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0) {
      throw ResourceLimitError("factorize: composite cofactor " + rest.get_str() +
                               " has no prime factor below 10^6");
    }
    out[rest] += 1;
  }
  return out;
}

ValuationImage valuation_map(const IntSet& x) {
  if (x.empty()) throw std::invalid_argument("valuation_map: empty set");
  std::vector<std::map<Int, unsigned long>> factored;
  factored.reserve(x.size());
  std::set<Int> prime_set;
  for (const Int& a : x) {
    if (a < 1) {
      throw std::invalid_argument("valuation_map: non-positive element " + a.get_str());
    }
    factored.push_back(factorize(a));
    for (const auto& [p, e] : factored.back()) prime_set.insert(p);
  }
  ValuationImage out;
  if (prime_set.empty()) prime_set.insert(2);  // x == {1}
  out.basis.primes.assign(prime_set.begin(), prime_set.end());
  const int d = static_cast<int>(out.basis.primes.size());
  std::vector<Int> flat;
  flat.reserve(x.size() * static_cast<std::size_t>(d));
  for (const auto& fac : factored) {
    for (const Int& p : out.basis.primes) {
      auto it = fac.find(p);
      flat.emplace_back(it == fac.end() ? 0UL : it->second);
    }
  }
  out.points = LatticeSet(d, std::move(flat));
  if (out.points.size() != x.size()) {
    throw InvariantViolation("valuation_map: image lost points");  // map is injective
  }
  return out;
}

std::vector<Int> valuation_point(const Int& n, const PrimeBasis& basis) {
  if (n < 1) throw std::invalid_argument("valuation_point: need n >= 1");
  std::vector<Int> out;
  out.reserve(basis.primes.size());
  Int rest = n;
  for (const Int& p : basis.primes) {
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    out.emplace_back(e);
  }
  if (rest != 1) {
    throw std::invalid_argument("valuation_point: " + n.get_str() +
                                " has a prime factor outside the basis");
  }
  return out;
}

Int element_of_point(std::span<const Int> p, const PrimeBasis& basis) {
  if (p.size() != basis.primes.size()) {
    throw std::invalid_argument("element_of_point: dimension mismatch");
  }
  Int out = 1;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] < 0) {
      throw std::invalid_argument("element_of_point: negative exponent");
    }
    out *= pow_int(basis.primes[j], p[j].get_ui());
  }
  return out;
}

IntSet valuation_inverse(const LatticeSet& points, const PrimeBasis& basis) {
  if (points.empty()) throw std::invalid_argument("valuation_inverse: empty set");
  if (points.dimension() != static_cast<int>(basis.primes.size())) {
    throw std::invalid_argument("valuation_inverse: dimension mismatch");
  }
  std::vector<Int> vals;
  vals.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    vals.push_back(element_of_point(points.point(i), basis));
  }
  return IntSet(std::move(vals));
}

PrimeBasis union_basis(const PrimeBasis& a, const PrimeBasis& b) {
  PrimeBasis out;
  std::set_union(a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(),
                 std::back_inserter(out.primes));
  return out;
}

LatticeSet embed_in_basis(const LatticeSet& points, const PrimeBasis& from,
                          const PrimeBasis& to) {
  if (points.dimension() != static_cast<int>(from.primes.size())) {
    throw std::invalid_argument("embed_in_basis: dimension mismatch");
  }
  std::vector<int> slot(from.primes.size());
  for (std::size_t j = 0; j < from.primes.size(); ++j) {
    auto it = std::lower_bound(to.primes.begin(), to.primes.end(), from.primes[j]);
    if (it == to.primes.end() || *it != from.primes[j]) {
      throw std::invalid_argument("embed_in_basis: target basis missing prime " +
                                  from.primes[j].get_str());
    }
    slot[j] = static_cast<int>(it - to.primes.begin());
  }
  const int d = static_cast<int>(to.primes.size());
  std::vector<Int> flat(points.size() * static_cast<std::size_t>(d), Int(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points.point(i);
    for (std::size_t j = 0; j < from.primes.size(); ++j) {
      flat[i * d + slot[j]] = p[j];
    }
  }
  return LatticeSet(d, std::move(flat));
}

std::vector<Int> primes_up_to(unsigned long n) {
  std::vector<Int> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.emplace_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

IntSet smooth_box(unsigned long prime_bound, unsigned long exponent_bound,
                  std::size_t max_points) {
  if (prime_bound < 2) {
    throw std::invalid_argument("smooth_box: prime bound must be >= 2");
  }
  const std::vector<Int> primes = primes_up_to(prime_bound);
  // Guard (E+1)^pi(P) against the point cap before enumerating.
  Int total = 1;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    total *= static_cast<unsigned long>(exponent_bound + 1);
    if (total > static_cast<unsigned long>(max_points)) {
      throw ResourceLimitError("smooth_box: box size exceeds max_points");
    }
  }
  std::vector<Int> elems;
  elems.reserve(total.get_ui());
  std::vector<unsigned long> exps(primes.size(), 0);
  while (true) {
    Int value = 1;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      for (unsigned long e = 0; e < exps[j]; ++e) value *= primes[j];
    }
    elems.push_back(std::move(value));
    // Odometer step over the exponent box.
    std::size_t j = 0;
    while (j < primes.size() && exps[j] == exponent_bound) {
      exps[j] = 0;
      ++j;
    }
    if (j == primes.size()) break;
    ++exps[j];
  }
  return IntSet(std::move(elems));
}

}  // namespace addcomb
