#include "addcomb/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "addcomb/detail/index_hash_set.hpp"

namespace addcomb {

namespace {

int lex_cmp(const Int* a, const Int* b, int d) {
  for (int j = 0; j < d; ++j) {
    const int c = cmp(a[j], b[j]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

LatticeSet::LatticeSet(int dimension, std::vector<Int> flat) : dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("LatticeSet: dimension must be >= 1");
  if (flat.size() % static_cast<std::size_t>(dimension) != 0) {
    throw std::invalid_argument("LatticeSet: coordinate count not divisible by dimension");
  }
  const std::size_t n = flat.size() / dimension;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  const Int* base = flat.data();
  const int d = dimension;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return lex_cmp(base + i * d, base + j * d, d) < 0;
  });
  flat_.reserve(flat.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Int* p = base + order[k] * d;
    if (!flat_.empty() && lex_cmp(flat_.data() + flat_.size() - d, p, d) == 0) continue;
    for (int j = 0; j < d; ++j) flat_.push_back(p[j]);
  }
}

LatticeSet LatticeSet::from_points(int dimension, const std::vector<std::vector<Int>>& points) {
  std::vector<Int> flat;
  flat.reserve(points.size() * static_cast<std::size_t>(dimension));
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dimension) {
      throw std::invalid_argument("LatticeSet: point dimension mismatch");
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return LatticeSet(dimension, std::move(flat));
}

std::vector<Int> LatticeSet::point_vec(std::size_t i) const {
  auto p = point(i);
  return {p.begin(), p.end()};
}

std::optional<std::size_t> LatticeSet::index_of(std::span<const Int> p) const {
  if (static_cast<int>(p.size()) != dimension_ || empty()) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = lex_cmp(flat_.data() + mid * dimension_, p.data(), dimension_);
    if (c == 0) return mid;
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

bool LatticeSet::contains(std::span<const Int> p) const { return index_of(p).has_value(); }

LatticeSet LatticeSet::select(std::span<const std::size_t> indices) const {
  std::vector<Int> flat;
  flat.reserve(indices.size() * static_cast<std::size_t>(dimension_));
  for (std::size_t i : indices) {
    if (i >= size()) throw std::out_of_range("LatticeSet::select: index out of range");
    auto p = point(i);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return LatticeSet(dimension_, std::move(flat));
}

LatticeSet sumset(const LatticeSet& a, const LatticeSet& b, std::size_t max_points) {
  if (a.empty() || b.empty()) throw std::invalid_argument("sumset: empty operand");
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("sumset: dimension mismatch");
  }
  const int d = a.dimension();
  std::vector<Int> pool;  // flat storage of distinct sums
  detail::IndexHashSet seen(a.size() + b.size());
  std::vector<Int> scratch(d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto pa = a.point(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto pb = b.point(j);
      for (int t = 0; t < d; ++t) scratch[t] = pa[t] + pb[t];
      const std::size_t h = hash_point(scratch);
      auto eq = [&](std::size_t idx) {
        return lex_cmp(pool.data() + idx * d, scratch.data(), d) == 0;
      };
      if (seen.contains(h, eq)) continue;
      if (pool.size() / d >= max_points) {
        throw ResourceLimitError("sumset: more than " + std::to_string(max_points) +
                                 " distinct points");
      }
      const std::size_t idx = pool.size() / d;
      pool.insert(pool.end(), scratch.begin(), scratch.end());
      seen.insert(idx, h, eq);
    }
  }
  return LatticeSet(d, std::move(pool));
}

LatticeSet iterated_sumset(const LatticeSet& a, unsigned long k, std::size_t max_points) {
  if (k == 0) throw std::invalid_argument("iterated_sumset: k must be >= 1");
  LatticeSet acc = a;
  for (unsigned long i = 1; i < k; ++i) acc = sumset(acc, a, max_points);
  return acc;
}

std::vector<Int> coordinate_values(const LatticeSet& a, int coord) {
  if (coord < 1 || coord > a.dimension()) {
    throw std::invalid_argument("coordinate_values: coordinate out of range");
  }
  std::vector<Int> vals;
  for (std::size_t i = 0; i < a.size(); ++i) vals.push_back(a.coord(i, coord));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::map<Int, LatticeSet> fibers(const LatticeSet& a, int coord) {
  if (coord < 1 || coord > a.dimension()) {
    throw std::invalid_argument("fibers: coordinate out of range");
  }
  std::map<Int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < a.size(); ++i) groups[a.coord(i, coord)].push_back(i);
  std::map<Int, LatticeSet> out;
  for (auto& [value, idx] : groups) out.emplace(value, a.select(idx));
  return out;
}

LatticeSet lattice_cube(int dimension, unsigned long side, std::size_t max_points) {
  if (dimension < 1 || side == 0) {
    throw std::invalid_argument("lattice_cube: need dimension >= 1 and side >= 1");
  }
  std::size_t total = 1;
  for (int j = 0; j < dimension; ++j) {
    if (total > max_points / side + 1) {
      throw ResourceLimitError("lattice_cube: more than " + std::to_string(max_points) +
                               " points");
    }
    total *= side;
  }
  if (total > max_points) {
    throw ResourceLimitError("lattice_cube: more than " + std::to_string(max_points) +
                             " points");
  }
  std::vector<Int> flat;
  flat.reserve(total * dimension);
  std::vector<unsigned long> digits(dimension, 0);
  for (std::size_t n = 0; n < total; ++n) {
    for (int j = 0; j < dimension; ++j) flat.emplace_back(digits[j]);
    for (int j = dimension - 1; j >= 0; --j) {
      if (++digits[j] < side) break;
      digits[j] = 0;
    }
  }
  return LatticeSet(dimension, std::move(flat));
}

}  // namespace addcomb
