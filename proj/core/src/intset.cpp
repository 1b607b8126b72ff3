#include "addcomb/intset.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "addcomb/detail/index_hash_set.hpp"

namespace addcomb {

IntSet::IntSet(std::vector<Int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool IntSet::contains(const Int& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

IntSet IntSet::unions(const IntSet& other) const {
  std::vector<Int> out;
  out.reserve(size() + other.size());
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out));
  IntSet result;
  result.elements_ = std::move(out);
  return result;
}

IntSet IntSet::set_minus(const IntSet& other) const {
  std::vector<Int> out;
  std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                      other.elements_.end(), std::back_inserter(out));
  IntSet result;
  result.elements_ = std::move(out);
  return result;
}

bool IntSet::disjoint_from(const IntSet& other) const {
  auto i = elements_.begin();
  auto j = other.elements_.begin();
  while (i != elements_.end() && j != other.elements_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

namespace {

enum class Op { Add, Mul };

// Pairwise combine with hash dedupe. A scratch value is reused for every
// candidate so only genuinely new elements cost an allocation.
IntSet combine(const IntSet& a, const IntSet& b, Op op, std::size_t max_points,
               const char* name) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument(std::string(name) + ": empty operand");
  }
  std::vector<Int> pool;
  pool.reserve(std::min(max_points, a.size() * b.size()));
  detail::IndexHashSet seen(a.size() + b.size());
  Int scratch;
  for (const Int& x : a) {
    for (const Int& y : b) {
      if (op == Op::Add) {
        scratch = x + y;
      } else {
        scratch = x * y;
      }
      const std::size_t h = hash_int(scratch);
      auto eq = [&](std::size_t i) { return pool[i] == scratch; };
      if (seen.contains(h, eq)) continue;
      if (pool.size() >= max_points) {
        throw ResourceLimitError(std::string(name) + ": more than " +
                                 std::to_string(max_points) + " distinct values");
      }
      pool.push_back(scratch);
      seen.insert(pool.size() - 1, h, eq);
    }
  }
  return IntSet(std::move(pool));
}

IntSet iterate(const IntSet& a, unsigned long k, Op op, std::size_t max_points,
               const char* name) {
  if (k == 0) throw std::invalid_argument(std::string(name) + ": k must be >= 1");
  if (a.empty()) throw std::invalid_argument(std::string(name) + ": empty operand");
  IntSet acc = a;
  for (unsigned long i = 1; i < k; ++i) acc = combine(acc, a, op, max_points, name);
  return acc;
}

}  // namespace

IntSet sumset(const IntSet& a, const IntSet& b, std::size_t max_points) {
  return combine(a, b, Op::Add, max_points, "sumset");
}

IntSet iterated_sumset(const IntSet& a, unsigned long k, std::size_t max_points) {
  return iterate(a, k, Op::Add, max_points, "iterated_sumset");
}

IntSet product_set(const IntSet& x, const IntSet& y, std::size_t max_points) {
  return combine(x, y, Op::Mul, max_points, "product_set");
}

IntSet iterated_product(const IntSet& x, unsigned long k, std::size_t max_points) {
  return iterate(x, k, Op::Mul, max_points, "iterated_product");
}

DoublingStats doubling_stats(const IntSet& a, std::size_t max_points) {
  if (a.empty()) throw std::invalid_argument("doubling_stats: empty set");
  DoublingStats out;
  out.size = static_cast<unsigned long>(a.size());
  out.sumset_size = static_cast<unsigned long>(sumset(a, a, max_points).size());
  out.product_size = static_cast<unsigned long>(product_set(a, a, max_points).size());
  out.k_plus = make_rat(out.sumset_size, out.size);
  out.k_star = make_rat(out.product_size, out.size);
  return out;
}

}  // namespace addcomb
