#pragma once

#include <string>
#include <vector>

#include "addcomb/bigint.hpp"

namespace addcomb {

/// One verified comparison. `lhs relation rhs` is evaluated exactly over the
/// rationals; `pass` records the outcome. Informational rows report a
/// comparison without contributing to pass/fail aggregation (used for bounds
/// whose constants are not sharp enough to hold universally).
struct CheckResult {
  std::string claim;
  Rat lhs;
  Rat rhs;
  std::string relation;  // "<=", ">=", "==", "<", ">"
  bool pass = false;
  bool informational = false;
};

using Ledger = std::vector<CheckResult>;

/// Evaluates the relation and fills in `pass`.
CheckResult make_check(std::string claim, const Rat& lhs, const std::string& relation,
                       const Rat& rhs);
CheckResult make_informational(std::string claim, const Rat& lhs, const std::string& relation,
                               const Rat& rhs);

/// True when every non-informational row passed.
bool all_checks_pass(const Ledger& ledger);

/// Appends `rows` to `into`.
void append_ledger(Ledger& into, const Ledger& rows);

}  // namespace addcomb
