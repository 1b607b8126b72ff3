// Acceptance gate: runs the full report suite and prints one line per
// criterion. Exits nonzero when any criterion fails.

#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include "addcomb/suite.hpp"

int main() {
  // Criterion order, by suite item id.
  static const std::pair<int, const char*> kCriteria[] = {
      {1, "tree_alternative"},     {2, "dp_vs_oracle"},
      {3, "query_pfr_end_to_end"}, {4, "chang_inequality"},
      {5, "lambda_complexity"},    {6, "quasicube_rate"},
      {7, "doubling_consistency"}, {8, "iterated_beta"},
      {9, "smooth_audit"},         {10, "moment_oracle"},
      {11, "beta_falsification"},
  };

  addcomb::SuiteReport report;
  try {
    addcomb::RunConfig cfg;
    report = addcomb::run_suite(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "suite aborted: %s\n", e.what());
    return 1;
  }

  std::map<std::string, const addcomb::SuiteItemResult*> by_id;
  for (const auto& item : report.items) by_id[item.id] = &item;

  int failures = 0;
  for (const auto& [number, id] : kCriteria) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      std::printf("criterion %2d %-22s MISSING\n", number, id);
      ++failures;
      continue;
    }
    const addcomb::SuiteItemResult& item = *it->second;
    std::size_t checked = 0;
    std::size_t passed = 0;
    for (const auto& row : item.ledger) {
      if (row.informational) continue;
      ++checked;
      passed += row.pass ? 1 : 0;
    }
    std::printf("criterion %2d %-22s %s  (%zu/%zu checks)%s%s\n", number, id,
                item.pass ? "PASS" : "FAIL", passed, checked,
                item.error.empty() ? "" : "  aborted: ", item.error.c_str());
    if (!item.pass) ++failures;
  }

  if (failures > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", std::size(kCriteria));
  return 0;
}
