#include "addcomb/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace addcomb {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned long long parse_u64(const std::string& value, const std::string& key) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (errno != 0 || end == value.c_str() || *end != '\0') {
    throw std::invalid_argument("config: bad integer for '" + key + "': '" + value + "'");
  }
  return v;
}

}  // namespace

void RunConfig::validate() const {
  if (epsilon.num == 0 || epsilon.num > epsilon.den) {
    throw std::invalid_argument("config: epsilon must lie in (0, 1]");
  }
  if (k_list.empty()) throw std::invalid_argument("config: k_list must be nonempty");
  for (unsigned long k : k_list) {
    if (k < 1 || k > 8) {
      throw std::invalid_argument("config: k values must lie in [1, 8]");
    }
  }
  if (max_points == 0) throw std::invalid_argument("config: max_points must be positive");
  if (oracle_max_leaves < 1 || oracle_max_leaves > 14) {
    throw std::invalid_argument("config: oracle_max_leaves must lie in [1, 14]");
  }
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("config: expected key=value, got '" + t + "'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "epsilon") {
      cfg.epsilon = Eps::parse(value);
    } else if (key == "k_list") {
      cfg.k_list.clear();
      std::size_t pos = 0;
      while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        if (comma == std::string::npos) comma = value.size();
        const std::string tok = trim(value.substr(pos, comma - pos));
        if (!tok.empty()) {
          cfg.k_list.push_back(static_cast<unsigned long>(parse_u64(tok, key)));
        }
        pos = comma + 1;
      }
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, key);
    } else if (key == "max_points") {
      cfg.max_points = static_cast<std::size_t>(parse_u64(value, key));
    } else if (key == "oracle_max_leaves") {
      cfg.oracle_max_leaves = static_cast<int>(parse_u64(value, key));
    } else if (key == "out_json") {
      cfg.out_json = value;
    } else if (key == "out_table") {
      cfg.out_table = value;
    } else if (key == "golden") {
      cfg.golden = value;
    } else if (key == "items") {
      cfg.items.clear();
      std::size_t pos = 0;
      while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        if (comma == std::string::npos) comma = value.size();
        const std::string tok = trim(value.substr(pos, comma - pos));
        if (!tok.empty()) cfg.items.push_back(tok);
        pos = comma + 1;
      }
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string RunConfig::str() const {
  std::string out;
  out += "epsilon=" + epsilon.str() + "\n";
  out += "k_list=";
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k_list[i]);
  }
  out += "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  out += "max_points=" + std::to_string(max_points) + "\n";
  out += "oracle_max_leaves=" + std::to_string(oracle_max_leaves) + "\n";
  if (!out_json.empty()) out += "out_json=" + out_json + "\n";
  if (!out_table.empty()) out += "out_table=" + out_table + "\n";
  if (!golden.empty()) out += "golden=" + golden + "\n";
  if (!items.empty()) {
    out += "items=";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ",";
      out += items[i];
    }
    out += "\n";
  }
  return out;
}

}  // namespace addcomb
