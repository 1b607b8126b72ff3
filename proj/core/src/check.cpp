#include "addcomb/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace addcomb {

namespace {

bool evaluate(const Rat& lhs, const std::string& relation, const Rat& rhs) {
  if (relation == "<=") return lhs <= rhs;
  if (relation == ">=") return lhs >= rhs;
  if (relation == "==") return lhs == rhs;
  if (relation == "<") return lhs < rhs;
  if (relation == ">") return lhs > rhs;
  throw std::invalid_argument("unknown relation '" + relation + "'");
}

}  // namespace

CheckResult make_check(std::string claim, const Rat& lhs, const std::string& relation,
                       const Rat& rhs) {
  CheckResult out;
  out.claim = std::move(claim);
  out.lhs = lhs;
  out.rhs = rhs;
  out.relation = relation;
  out.pass = evaluate(lhs, relation, rhs);
  return out;
}

CheckResult make_informational(std::string claim, const Rat& lhs, const std::string& relation,
                               const Rat& rhs) {
  CheckResult out = make_check(std::move(claim), lhs, relation, rhs);
  out.informational = true;
  return out;
}

bool all_checks_pass(const Ledger& ledger) {
  return std::all_of(ledger.begin(), ledger.end(),
                     [](const CheckResult& c) { return c.informational || c.pass; });
}

void append_ledger(Ledger& into, const Ledger& rows) {
  into.insert(into.end(), rows.begin(), rows.end());
}

}  // namespace addcomb
