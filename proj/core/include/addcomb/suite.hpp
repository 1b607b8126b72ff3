#pragma once

#include <map>
#include <string>
#include <vector>

#include "addcomb/check.hpp"
#include "addcomb/config.hpp"

#include <json.hpp>

namespace addcomb {

/// Frozen expected values for the worked instances. A golden file (simple
/// key=value text) can override these; any mismatch fails the corresponding
/// suite check.
struct GoldenValues {
  std::map<std::string, Int> values;

  static GoldenValues defaults();
  static GoldenValues from_file(const std::string& path);
  const Int& at(const std::string& key) const;  // throws on unknown key
};

struct SuiteItemResult {
  std::string id;
  Ledger ledger;
  bool pass = false;        // every non-informational row passed
  std::string error;        // nonempty when the item aborted; the item fails
};

struct SuiteReport {
  RunConfig config;
  std::vector<SuiteItemResult> items;  // ordered by id
  bool all_pass = false;
};

/// All suite item ids, in canonical (alphabetical) order.
const std::vector<std::string>& suite_item_ids();

/// Runs the acceptance suite described by the config (all items, or the
/// config's `items` subset). Items run in a worker pool and are merged
/// deterministically by id; each item is pure given (config, golden).
SuiteReport run_suite(const RunConfig& config);

nlohmann::ordered_json report_to_json(const SuiteReport& report);
std::string report_to_table(const SuiteReport& report);

/// Writes the JSON/table files named by the config (empty path = skip).
/// Returns 0 when every item passed, 1 otherwise.
int emit_report(const SuiteReport& report);

}  // namespace addcomb
