#include "addcomb/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "addcomb/valuation.hpp"

namespace addcomb {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = engine_();
    if (rem == 0 || x <= max - rem) return x % n;
  }
}

long long Rng::range(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::range: empty interval");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<long long>(below(span));
}

namespace {

long long require_param(const GeneratorSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw std::invalid_argument("generator '" + spec.kind + "': missing parameter '" + key +
                                "'");
  }
  return it->second;
}

long long param_or(const GeneratorSpec& spec, const std::string& key, long long fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

void require_keys(const GeneratorSpec& spec, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  for (const char* key : required) require_param(spec, key);
  for (const auto& [key, value] : spec.params) {
    const bool known = std::any_of(required.begin(), required.end(),
                                   [&](const char* r) { return key == r; }) ||
                       std::any_of(optional.begin(), optional.end(),
                                   [&](const char* o) { return key == o; });
    if (!known) {
      throw std::invalid_argument("generator '" + spec.kind + "': unknown parameter '" + key +
                                  "'");
    }
  }
}

void check(bool ok, const GeneratorSpec& spec, const std::string& what) {
  if (!ok) throw std::invalid_argument("generator '" + spec.kind + "': " + what);
}

}  // namespace

void GeneratorSpec::validate() const {
  if (kind == "ap") {
    require_keys(*this, {"start", "step", "len"});
    check(require_param(*this, "len") >= 1, *this, "len must be >= 1");
  } else if (kind == "gp") {
    require_keys(*this, {"start", "ratio", "len"});
    check(require_param(*this, "start") >= 1, *this, "start must be >= 1");
    check(require_param(*this, "ratio") >= 2, *this, "ratio must be >= 2");
    check(require_param(*this, "len") >= 1, *this, "len must be >= 1");
  } else if (kind == "cube") {
    require_keys(*this, {"d"}, {"side"});
    check(require_param(*this, "d") >= 1, *this, "d must be >= 1");
    check(param_or(*this, "side", 2) >= 2, *this, "side must be >= 2");
  } else if (kind == "random_lattice") {
    require_keys(*this, {"d", "count", "bound"});
    check(require_param(*this, "d") >= 1, *this, "d must be >= 1");
    check(require_param(*this, "count") >= 1, *this, "count must be >= 1");
    check(require_param(*this, "bound") >= 0, *this, "bound must be >= 0");
  } else if (kind == "random_int") {
    require_keys(*this, {"count", "bound"});
    check(require_param(*this, "count") >= 1, *this, "count must be >= 1");
    check(require_param(*this, "bound") >= require_param(*this, "count"), *this,
          "bound must be >= count");
  } else if (kind == "smooth_box") {
    require_keys(*this, {"p", "e"});
    check(require_param(*this, "p") >= 2, *this, "p must be >= 2");
    check(require_param(*this, "e") >= 1, *this, "e must be >= 1");
  } else if (kind == "dilate_union") {
    require_keys(*this, {"len", "q1", "q2"});
    check(require_param(*this, "len") >= 1, *this, "len must be >= 1");
    check(require_param(*this, "q1") >= 1, *this, "q1 must be >= 1");
    check(require_param(*this, "q2") >= 1, *this, "q2 must be >= 1");
  } else {
    throw std::invalid_argument("unknown generator kind '" + kind + "'");
  }
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (spec.kind.empty()) throw std::invalid_argument("generator spec: empty kind");
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string pair = rest.substr(pos, comma - pos);
      const auto eq = pair.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("generator spec: malformed parameter '" + pair + "'");
      }
      const std::string key = pair.substr(0, eq);
      const std::string value = pair.substr(eq + 1);
      char* end = nullptr;
      errno = 0;
      const long long v = std::strtoll(value.c_str(), &end, 10);
      if (errno != 0 || end == value.c_str() || *end != '\0') {
        throw std::invalid_argument("generator spec: bad integer '" + value + "'");
      }
      if (key == "seed") {
        spec.seed = static_cast<std::uint64_t>(v);
      } else {
        spec.params[key] = v;
      }
      pos = comma + 1;
    }
  }
  spec.validate();
  return spec;
}

std::string GeneratorSpec::str() const {
  std::string out = kind + ":";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out += ",";
    out += key + "=" + std::to_string(value);
    first = false;
  }
  if (!first) out += ",";
  out += "seed=" + std::to_string(seed);
  return out;
}

IntSet ap_set(const Int& start, const Int& step, unsigned long len) {
  if (len < 1) throw std::invalid_argument("ap_set: len must be >= 1");
  std::vector<Int> elems;
  elems.reserve(len);
  Int cur = start;
  for (unsigned long i = 0; i < len; ++i) {
    elems.push_back(cur);
    cur += step;
  }
  return IntSet(std::move(elems));
}

IntSet gp_set(const Int& start, const Int& ratio, unsigned long len) {
  if (len < 1) throw std::invalid_argument("gp_set: len must be >= 1");
  if (start < 1 || ratio < 1) {
    throw std::invalid_argument("gp_set: start and ratio must be >= 1");
  }
  std::vector<Int> elems;
  elems.reserve(len);
  Int cur = start;
  for (unsigned long i = 0; i < len; ++i) {
    elems.push_back(cur);
    cur *= ratio;
  }
  return IntSet(std::move(elems));
}

IntSet random_int_set(Rng& rng, std::size_t count, long long bound) {
  if (count < 1) throw std::invalid_argument("random_int_set: count must be >= 1");
  if (bound < static_cast<long long>(count)) {
    throw std::invalid_argument("random_int_set: bound must be >= count");
  }
  std::set<long long> seen;
  while (seen.size() < count) {
    seen.insert(rng.range(1, bound));
  }
  std::vector<Int> elems;
  elems.reserve(count);
  for (long long v : seen) elems.emplace_back(static_cast<long>(v));
  return IntSet(std::move(elems));
}

LatticeSet random_lattice_set(Rng& rng, int dimension, std::size_t count,
                              long long coord_bound) {
  if (dimension < 1) throw std::invalid_argument("random_lattice_set: dimension must be >= 1");
  if (count < 1) throw std::invalid_argument("random_lattice_set: count must be >= 1");
  if (coord_bound < 0) throw std::invalid_argument("random_lattice_set: bound must be >= 0");
  Int capacity = 1;
  for (int j = 0; j < dimension; ++j) {
    capacity *= static_cast<long>(coord_bound + 1);
    if (capacity >= static_cast<long>(count)) break;  // enough room, stop early
  }
  if (capacity < static_cast<long>(count)) {
    throw std::invalid_argument("random_lattice_set: not enough distinct points available");
  }
  std::set<std::vector<long long>> seen;
  while (seen.size() < count) {
    std::vector<long long> p(dimension);
    for (int j = 0; j < dimension; ++j) p[j] = rng.range(0, coord_bound);
    seen.insert(std::move(p));
  }
  std::vector<Int> flat;
  flat.reserve(count * static_cast<std::size_t>(dimension));
  for (const auto& p : seen) {
    for (long long c : p) flat.emplace_back(static_cast<long>(c));
  }
  return LatticeSet(dimension, std::move(flat));
}

GeneratedSet generate(const GeneratorSpec& spec, std::size_t max_points) {
  spec.validate();
  if (spec.kind == "ap") {
    return {ap_set(Int(static_cast<long>(require_param(spec, "start"))),
                   Int(static_cast<long>(require_param(spec, "step"))),
                   static_cast<unsigned long>(require_param(spec, "len")))};
  }
  if (spec.kind == "gp") {
    return {gp_set(Int(static_cast<long>(require_param(spec, "start"))),
                   Int(static_cast<long>(require_param(spec, "ratio"))),
                   static_cast<unsigned long>(require_param(spec, "len")))};
  }
  if (spec.kind == "cube") {
    return {lattice_cube(static_cast<int>(require_param(spec, "d")),
                         static_cast<unsigned long>(param_or(spec, "side", 2)), max_points)};
  }
  if (spec.kind == "random_lattice") {
    Rng rng(spec.seed);
    return {random_lattice_set(rng, static_cast<int>(require_param(spec, "d")),
                               static_cast<std::size_t>(require_param(spec, "count")),
                               require_param(spec, "bound"))};
  }
  if (spec.kind == "random_int") {
    Rng rng(spec.seed);
    return {random_int_set(rng, static_cast<std::size_t>(require_param(spec, "count")),
                           require_param(spec, "bound"))};
  }
  if (spec.kind == "smooth_box") {
    return {smooth_box(static_cast<unsigned long>(require_param(spec, "p")),
                       static_cast<unsigned long>(require_param(spec, "e")), max_points)};
  }
  // dilate_union
  const unsigned long len = static_cast<unsigned long>(require_param(spec, "len"));
  const long q1 = static_cast<long>(require_param(spec, "q1"));
  const long q2 = static_cast<long>(require_param(spec, "q2"));
  std::vector<Int> elems;
  elems.reserve(2 * len);
  for (unsigned long i = 0; i < len; ++i) {
    elems.push_back(Int(static_cast<long>(i)) * q1);
    elems.push_back(Int(static_cast<long>(i)) * q2);
  }
  return {IntSet(std::move(elems))};
}

}  // namespace addcomb
