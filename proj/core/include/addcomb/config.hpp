#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addcomb/bigint.hpp"
#include "addcomb/exactcmp.hpp"

namespace addcomb {

/// Run configuration, parsed from simple "key=value" text (one pair per
/// line, '#' comments ignored). Unknown keys are rejected.
///
/// Keys: epsilon (rational "p/q"), k_list (comma-separated), seed,
/// max_points, oracle_max_leaves, out_json, out_table, golden (path of a
/// key=value file overriding frozen expected values), items (comma-separated
/// suite item ids; empty = all).
struct RunConfig {
  Eps epsilon{1, 2};
  std::vector<unsigned long> k_list{2, 3};
  std::uint64_t seed = 7;
  std::size_t max_points = kDefaultMaxPoints;
  int oracle_max_leaves = 14;
  std::string out_json;
  std::string out_table;
  std::string golden;
  std::vector<std::string> items;

  void validate() const;  // throws std::invalid_argument

  static RunConfig parse(const std::string& text);
  static RunConfig from_file(const std::string& path);
  std::string str() const;  // round-trips through parse
};

}  // namespace addcomb
