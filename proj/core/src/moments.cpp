#include "addcomb/moments.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace addcomb {

WeightedSet::WeightedSet(std::map<Int, Rat> entries) : entries_(std::move(entries)) {
  for (const auto& [freq, weight] : entries_) {
    if (weight <= 0) {
      throw std::invalid_argument("WeightedSet: weight at " + freq.get_str() +
                                  " is not positive");
    }
  }
}

WeightedSet WeightedSet::unit(const IntSet& a) {
  std::map<Int, Rat> entries;
  for (const Int& v : a) entries.emplace(v, 1);
  return WeightedSet(std::move(entries));
}

Rat WeightedSet::weight_square_sum() const {
  Rat total = 0;
  for (const auto& [freq, weight] : entries_) total += weight * weight;
  return total;
}

WeightedSet WeightedSet::scaled(const Rat& factor) const {
  if (factor <= 0) throw std::invalid_argument("WeightedSet::scaled: factor must be > 0");
  std::map<Int, Rat> entries;
  for (const auto& [freq, weight] : entries_) entries.emplace(freq, weight * factor);
  return WeightedSet(std::move(entries));
}

WeightedSet WeightedSet::plus(const WeightedSet& other) const {
  std::map<Int, Rat> entries = entries_;
  for (const auto& [freq, weight] : other.entries_) {
    auto [it, inserted] = entries.emplace(freq, weight);
    if (!inserted) it->second += weight;
  }
  return WeightedSet(std::move(entries));
}

namespace {

// One convolution step of sparse nonneg-weight functions.
template <typename V>
std::map<Int, V> convolve(const std::map<Int, V>& f, const std::map<Int, V>& g,
                          std::size_t max_points) {
  std::map<Int, V> out;
  for (const auto& [s, u] : f) {
    for (const auto& [t, v] : g) {
      auto [it, inserted] = out.emplace(s + t, u * v);
      if (!inserted) {
        it->second += u * v;
      } else if (out.size() > max_points) {
        throw ResourceLimitError("convolution support exceeds " +
                                 std::to_string(max_points) + " points");
      }
    }
  }
  return out;
}

template <typename V>
std::map<Int, V> self_convolve(std::map<Int, V> base, unsigned long k,
                               std::size_t max_points) {
  if (k == 0) throw std::invalid_argument("moment order k must be >= 1");
  std::map<Int, V> acc = base;
  for (unsigned long i = 1; i < k; ++i) acc = convolve(acc, base, max_points);
  return acc;
}

}  // namespace

Int RepFunction::total_mass() const {
  Int total = 0;
  for (const auto& [s, c] : counts) total += c;
  return total;
}

RepFunction representation_function(const IntSet& a, unsigned long k,
                                    std::size_t max_points) {
  if (a.empty()) throw std::invalid_argument("representation_function: empty set");
  std::map<Int, Int> indicator;
  for (const Int& v : a) indicator.emplace(v, 1);
  RepFunction out;
  out.k = k;
  out.counts = self_convolve(std::move(indicator), k, max_points);
  return out;
}

Int additive_energy(const IntSet& a, unsigned long k, std::size_t max_points) {
  const RepFunction rep = representation_function(a, k, max_points);
  Int total = 0;
  for (const auto& [s, c] : rep.counts) total += c * c;
  return total;
}

MomentValue weighted_moment(const WeightedSet& w, unsigned long k,
                            std::size_t max_points) {
  if (w.empty()) throw std::invalid_argument("weighted_moment: empty weighted set");
  const std::map<Int, Rat> conv = self_convolve(w.entries(), k, max_points);
  MomentValue out;
  out.k = k;
  out.value = 0;
  for (const auto& [s, v] : conv) out.value += v * v;
  return out;
}

Rat LambdaLowerHandle::lambda_pow_k_lower() const {
  return make_rat(energy, pow_int(set_size, k));
}

bool LambdaLowerHandle::consistent_with_upper(const Rat& bound) const {
  // energy / size^k <= bound^k, cleared of denominators.
  Rat bk = 1;
  for (unsigned long i = 0; i < k; ++i) bk *= bound;
  return Rat(energy) <= Rat(pow_int(set_size, k)) * bk;
}

LambdaLowerHandle lambda_lower_estimate(const IntSet& a, unsigned long k,
                                        std::size_t max_points) {
  if (a.empty()) throw std::invalid_argument("lambda_lower_estimate: empty set");
  LambdaLowerHandle out;
  out.energy = additive_energy(a, k, max_points);
  out.set_size = static_cast<unsigned long>(a.size());
  out.k = k;
  return out;
}

CheckResult cauchy_schwarz_check(const IntSet& a, unsigned long k,
                                 std::size_t max_points) {
  const Int energy = additive_energy(a, k, max_points);
  const Int ksum = static_cast<unsigned long>(iterated_sumset(a, k, max_points).size());
  const Int n = static_cast<unsigned long>(a.size());
  return make_check("|" + std::to_string(k) + "A| * E_" + std::to_string(k) +
                        "(A) >= |A|^" + std::to_string(2 * k),
                    Rat(ksum * energy), ">=", Rat(pow_int(n, 2 * k)));
}

}  // namespace addcomb
