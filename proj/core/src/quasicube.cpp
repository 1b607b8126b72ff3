#include "addcomb/quasicube.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace addcomb {

namespace {

struct SearchCtx {
  const LatticeSet& u;
  std::set<std::pair<std::vector<std::size_t>, std::vector<int>>> failed;
  std::size_t states = 0;
};

// Coordinates (from `coords`) that still vary on the subset, with their
// value sets; a coordinate with > 2 values disqualifies itself but not the
// subset.
std::vector<int> varying_coords(const SearchCtx& ctx,
                                const std::vector<std::size_t>& members,
                                const std::vector<int>& coords) {
  std::vector<int> out;
  for (int j : coords) {
    const Int& first = ctx.u.coord(members.front(), j);
    for (std::size_t i : members) {
      if (ctx.u.coord(i, j) != first) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

std::optional<QuasicubeCertificate> search(SearchCtx& ctx,
                                           const std::vector<std::size_t>& members,
                                           const std::vector<int>& coords) {
  if (members.size() <= 1) return QuasicubeCertificate{};
  if (++ctx.states > 10'000'000) {
    throw ResourceLimitError("quasicube search exceeded its state budget");
  }
  const std::vector<int> varying = varying_coords(ctx, members, coords);
  if (varying.empty()) return std::nullopt;  // distinct points must vary somewhere
  const auto key = std::make_pair(members, varying);
  if (ctx.failed.count(key)) return std::nullopt;
  for (std::size_t pos = 0; pos < varying.size(); ++pos) {
    const int j = varying[pos];
    std::map<Int, std::vector<std::size_t>> groups;
    for (std::size_t i : members) groups[ctx.u.coord(i, j)].push_back(i);
    if (groups.size() != 2) continue;  // 1 value cannot happen here; >2 unusable
    std::vector<int> rest;
    for (int c : varying) {
      if (c != j) rest.push_back(c);
    }
    QuasicubeCertificate cert;
    cert.coord = j;
    bool ok = true;
    for (auto& [value, fiber] : groups) {
      auto sub = search(ctx, fiber, rest);
      if (!sub) {
        ok = false;
        break;
      }
      cert.values.push_back(value);
      cert.children.push_back(std::move(*sub));
    }
    if (ok) return cert;
  }
  ctx.failed.insert(key);
  return std::nullopt;
}

}  // namespace

std::optional<QuasicubeCertificate> quasicube_subset_certificate(const LatticeSet& u) {
  if (u.empty()) return QuasicubeCertificate{};
  SearchCtx ctx{u, {}, 0};
  std::vector<std::size_t> all(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) all[i] = i;
  std::vector<int> coords(u.dimension());
  for (int j = 0; j < u.dimension(); ++j) coords[j] = j + 1;
  return search(ctx, all, coords);
}

namespace {

bool replay(const LatticeSet& u, const std::vector<std::size_t>& members,
            const QuasicubeCertificate& cert) {
  if (cert.coord == 0) {
    return members.size() <= 1 && cert.values.empty() && cert.children.empty();
  }
  if (cert.coord < 1 || cert.coord > u.dimension()) return false;
  if (cert.values.size() != cert.children.size()) return false;
  if (cert.values.empty() || cert.values.size() > 2) return false;
  std::map<Int, std::vector<std::size_t>> groups;
  for (std::size_t i : members) groups[u.coord(i, cert.coord)].push_back(i);
  if (groups.size() != cert.values.size()) return false;
  std::size_t pos = 0;
  for (auto& [value, fiber] : groups) {
    if (value != cert.values[pos]) return false;
    if (!replay(u, fiber, cert.children[pos])) return false;
    ++pos;
  }
  return true;
}

}  // namespace

bool replay_certificate(const LatticeSet& u, const QuasicubeCertificate& cert) {
  if (u.empty()) return cert.coord == 0 && cert.values.empty() && cert.children.empty();
  std::vector<std::size_t> all(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) all[i] = i;
  return replay(u, all, cert);
}

}  // namespace addcomb
