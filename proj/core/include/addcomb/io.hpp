#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "addcomb/check.hpp"
#include "addcomb/intset.hpp"
#include "addcomb/lattice.hpp"
#include "addcomb/moments.hpp"

#include <json.hpp>

namespace addcomb {

/// Set file format: UTF-8 text, one element per line; plain integers for an
/// integer set, comma-separated coordinates for a lattice set; lines starting
/// with '#' (and blank lines) are ignored. Parsing and serialization are
/// exact inverses of each other.
struct SetFile {
  std::variant<IntSet, LatticeSet> value;

  bool is_lattice() const { return value.index() == 1; }
  const IntSet& ints() const { return std::get<IntSet>(value); }
  const LatticeSet& lattice() const { return std::get<LatticeSet>(value); }
};

/// Throws std::invalid_argument on malformed lines, mixed dimensions, or an
/// input with no elements at all.
SetFile parse_set_text(const std::string& text);
SetFile read_set_file(const std::string& path);

std::string serialize_set(const IntSet& a);
std::string serialize_set(const LatticeSet& a);
std::string serialize_set(const SetFile& f);
void write_set_file(const std::string& path, const SetFile& f);

/// Weighted set file: lines "element,weight" with weight a rational "p/q".
WeightedSet parse_weighted_text(const std::string& text);
std::string serialize_weighted(const WeightedSet& w);

/// Ledger rows as JSON: [{claim, lhs, rhs, relation, pass}] with rationals
/// rendered as exact "p/q" strings (plain integers without the "/1").
/// Informational rows carry an extra "informational": true field.
nlohmann::ordered_json ledger_to_json(const Ledger& ledger);
Ledger ledger_from_json(const nlohmann::ordered_json& rows);

/// Fixed-width human-readable rendering of a ledger.
std::string render_ledger_table(const Ledger& ledger);

}  // namespace addcomb
