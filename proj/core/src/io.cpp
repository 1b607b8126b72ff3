#include "addcomb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace addcomb {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Int parse_int_token(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw std::invalid_argument("set file: empty integer token");
  try {
    return Int(t);
  } catch (const std::exception&) {
    throw std::invalid_argument("set file: bad integer '" + t + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

SetFile parse_set_text(const std::string& text) {
  int forced_dim = 0;  // from a "# dim=N" directive
  std::vector<std::string> data_lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("dim=", 0) == 0) {
        try {
          forced_dim = std::stoi(body.substr(4));
        } catch (const std::exception&) {
          throw std::invalid_argument("set file: bad dimension directive '" + t + "'");
        }
        if (forced_dim < 1) {
          throw std::invalid_argument("set file: dimension directive must be >= 1");
        }
      }
      continue;
    }
    data_lines.push_back(t);
  }
  if (data_lines.empty()) {
    throw std::invalid_argument("set file: no elements");
  }

  const bool lattice = forced_dim > 0 || data_lines.front().find(',') != std::string::npos;
  if (!lattice) {
    std::vector<Int> elems;
    elems.reserve(data_lines.size());
    for (const std::string& l : data_lines) {
      if (l.find(',') != std::string::npos) {
        throw std::invalid_argument("set file: mixed scalar and coordinate lines");
      }
      elems.push_back(parse_int_token(l));
    }
    return SetFile{IntSet(std::move(elems))};
  }

  int dim = forced_dim;
  std::vector<Int> flat;
  for (const std::string& l : data_lines) {
    const std::vector<std::string> parts = split(l, ',');
    if (dim == 0) dim = static_cast<int>(parts.size());
    if (static_cast<int>(parts.size()) != dim) {
      throw std::invalid_argument("set file: inconsistent dimension on line '" + l + "'");
    }
    for (const std::string& p : parts) flat.push_back(parse_int_token(p));
  }
  return SetFile{LatticeSet(dim, std::move(flat))};
}

SetFile read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set_text(buf.str());
}

std::string serialize_set(const IntSet& a) {
  std::string out;
  for (const Int& v : a) {
    out += v.get_str();
    out += '\n';
  }
  return out;
}

std::string serialize_set(const LatticeSet& a) {
  std::string out = "# dim=" + std::to_string(a.dimension()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = a.point(i);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out += ',';
      out += p[j].get_str();
    }
    out += '\n';
  }
  return out;
}

std::string serialize_set(const SetFile& f) {
  return f.is_lattice() ? serialize_set(f.lattice()) : serialize_set(f.ints());
}

void write_set_file(const std::string& path, const SetFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file '" + path + "'");
  out << serialize_set(f);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

WeightedSet parse_weighted_text(const std::string& text) {
  std::map<Int, Rat> entries;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::vector<std::string> parts = split(t, ',');
    if (parts.size() != 2) {
      throw std::invalid_argument("weighted set file: expected 'element,weight' on '" + t +
                                  "'");
    }
    const Int x = parse_int_token(parts[0]);
    if (entries.count(x)) {
      throw std::invalid_argument("weighted set file: duplicate element '" +
                                  parts[0] + "'");
    }
    entries.emplace(x, rat_from_string(trim(parts[1])));
  }
  return WeightedSet(std::move(entries));
}

std::string serialize_weighted(const WeightedSet& w) {
  std::string out;
  for (const auto& [x, weight] : w.entries()) {
    out += x.get_str();
    out += ',';
    out += rat_to_string(weight);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json ledger_to_json(const Ledger& ledger) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CheckResult& row : ledger) {
    nlohmann::ordered_json r;
    r["claim"] = row.claim;
    r["lhs"] = rat_to_string(row.lhs);
    r["rhs"] = rat_to_string(row.rhs);
    r["relation"] = row.relation;
    r["pass"] = row.pass;
    if (row.informational) r["informational"] = true;
    rows.push_back(std::move(r));
  }
  return rows;
}

Ledger ledger_from_json(const nlohmann::ordered_json& rows) {
  Ledger out;
  for (const auto& r : rows) {
    CheckResult row;
    row.claim = r.at("claim").get<std::string>();
    row.lhs = rat_from_string(r.at("lhs").get<std::string>());
    row.rhs = rat_from_string(r.at("rhs").get<std::string>());
    row.relation = r.at("relation").get<std::string>();
    row.pass = r.at("pass").get<bool>();
    row.informational = r.value("informational", false);
    out.push_back(std::move(row));
  }
  return out;
}

std::string render_ledger_table(const Ledger& ledger) {
  std::size_t width = 5;
  for (const CheckResult& row : ledger) width = std::max(width, row.claim.size());
  width = std::min<std::size_t>(width, 72);

  std::string out;
  for (const CheckResult& row : ledger) {
    const char* status = row.informational ? "info" : (row.pass ? "pass" : "FAIL");
    std::string claim = row.claim;
    if (claim.size() > width) claim = claim.substr(0, width - 3) + "...";
    out += status;
    out += "  ";
    out += claim;
    out.append(width - claim.size() + 2, ' ');
    out += rat_to_string(row.lhs) + " " + row.relation + " " + rat_to_string(row.rhs);
    out += '\n';
  }
  return out;
}

}  // namespace addcomb
