#include "addcomb/pfr.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "addcomb/tree_stats.hpp"

namespace addcomb {

ExtractionResult extract_structured_subset(const LatticeSet& a, Eps eps,
                                           bool with_doubling, std::size_t max_points,
                                           std::optional<Int> known_sumset_size) {
  if (a.size() < 2) {
    throw std::invalid_argument("extract_structured_subset: need |A| >= 2");
  }
  const FiberTree source_tree = build_fiber_tree(a);
  const Int n = static_cast<unsigned long>(a.size());

  ExtractionResult out;
  out.epsilon = eps;
  out.source_size = a.size();
  out.query_budget = floor_eps_log2(n, eps);
  out.source_binary_max = binary_subtree_values(source_tree.tree)[source_tree.tree.root()];

  const LowSubtreeResult low =
      max_low_subtree(source_tree.tree, static_cast<int>(out.query_budget), true);
  std::vector<std::size_t> picked;
  picked.reserve(low.witness.ordinals.size());
  for (int ordinal : low.witness.ordinals) {
    picked.push_back(leaf_point_index(source_tree, source_tree.tree.leaves()[ordinal]));
  }
  out.subset = a.select(picked);
  if (out.subset.size() != picked.size()) {
    throw InvariantViolation("extract: selected subset lost points");
  }
  out.tree = build_fiber_tree(out.subset);

  const Int sz = static_cast<unsigned long>(out.subset.size());
  const Int b = int_from(out.source_binary_max);
  out.checks.push_back(make_check(
      "|A'|^" + std::to_string(eps.num) + " * b^" + std::to_string(eps.den) +
          " >= |A|^" + std::to_string(eps.num),
      Rat(pow_int(sz, eps.num) * pow_int(b, eps.den)), ">=", Rat(pow_int(n, eps.num))));
  // The subset's own tree can only be shallower than the induced subtree
  // that produced it (unary fibers compress away).
  out.checks.push_back(make_check("branch_depth(T(A')) <= query budget",
                                  Rat(Int(branch_depth(out.tree.tree))), "<=",
                                  Rat(Int(static_cast<long>(out.query_budget)))));
  if (with_doubling) {
    if (known_sumset_size) {
      out.sumset_size = *known_sumset_size;
    } else {
      out.sumset_size = Int(static_cast<unsigned long>(sumset(a, a, max_points).size()));
    }
    // |A'| >= K^(-2/eps) |A| with K = |A+A|/|A|, cleared of roots:
    // |A'|^p * |A+A|^(2q) >= |A|^(p+2q).
    out.checks.push_back(
        make_check("|A'|^" + std::to_string(eps.num) + " * |A+A|^" +
                       std::to_string(2 * eps.den) + " >= |A|^" +
                       std::to_string(eps.num + 2 * eps.den),
                   Rat(pow_int(sz, eps.num) * pow_int(*out.sumset_size, 2 * eps.den)),
                   ">=", Rat(pow_int(n, eps.num + 2 * eps.den))));
  }
  if (!all_checks_pass(out.checks)) {
    throw InvariantViolation("extract: a structural guarantee failed");
  }
  return out;
}

QueryTranscript run_query_protocol(const ExtractionResult& result,
                                   std::span<const Int> x) {
  const LatticeSet& pts = result.subset;
  if (!pts.contains(x)) {
    throw std::invalid_argument("run_query_protocol: element is not in the subset");
  }
  QueryTranscript out;
  const Tree& t = result.tree.tree;
  int v = t.root();
  while (!t.is_leaf(v)) {
    const auto& ch = t.node(v).children;
    if (ch.size() == 1) {
      v = ch[0];  // forced step, no query charged
      continue;
    }
    const int coord = t.node(ch[0]).coord;
    const Int& answer = x[static_cast<std::size_t>(coord - 1)];
    out.queries.emplace_back(coord, answer);
    int next = -1;
    for (int c : ch) {
      if (t.node(c).label_value == answer) {
        next = c;
        break;
      }
    }
    if (next < 0) {
      throw InvariantViolation("query protocol: no fiber matches a member element");
    }
    v = next;
  }
  out.identified = pts.point_vec(leaf_point_index(result.tree, v));
  if (!std::equal(out.identified.begin(), out.identified.end(), x.begin(), x.end())) {
    throw InvariantViolation("query protocol: identified the wrong element");
  }
  if (out.queries.size() > result.query_budget) {
    throw InvariantViolation("query protocol: transcript exceeded the budget");
  }
  return out;
}

namespace {

int query_complexity_rec(const LatticeSet& a, std::vector<std::size_t>& members,
                         std::map<std::vector<std::size_t>, int>& memo) {
  if (members.size() <= 1) return 0;
  auto it = memo.find(members);
  if (it != memo.end()) return it->second;
  int best = -1;
  for (int j = 1; j <= a.dimension(); ++j) {
    std::map<Int, std::vector<std::size_t>> groups;
    for (std::size_t i : members) groups[a.coord(i, j)].push_back(i);
    if (groups.size() < 2) continue;
    int worst = 0;
    for (auto& [value, fiber] : groups) {
      worst = std::max(worst, query_complexity_rec(a, fiber, memo));
      if (best >= 0 && worst + 1 >= best) break;  // cannot improve
    }
    if (best < 0 || worst + 1 < best) best = worst + 1;
    if (best == 1) break;  // optimum for any multi-element set
  }
  if (best < 0) {
    throw InvariantViolation("query complexity: distinct points with no splitting coordinate");
  }
  memo.emplace(members, best);
  return best;
}

}  // namespace

int exact_query_complexity(const LatticeSet& a) {
  if (a.empty()) throw std::invalid_argument("exact_query_complexity: empty set");
  if (a.size() > 64 || a.dimension() > 8) {
    throw std::invalid_argument("exact_query_complexity: oracle limited to |A| <= 64, d <= 8");
  }
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
  std::map<std::vector<std::size_t>, int> memo;
  return query_complexity_rec(a, all, memo);
}

BetaUpper beta_upper_search(const LatticeSet& u, std::span<const BetaCandidate> candidates,
                            std::size_t max_points) {
  if (u.empty()) throw std::invalid_argument("beta_upper_search: empty set");
  if (candidates.empty()) {
    throw std::invalid_argument("beta_upper_search: no candidates supplied");
  }
  BetaUpper best;
  bool have = false;
  for (const BetaCandidate& c : candidates) {
    if (c.a1.empty() || c.a2.empty() || c.a1.dimension() != u.dimension() ||
        c.a2.dimension() != u.dimension()) {
      throw std::invalid_argument("beta_upper_search: bad candidate '" + c.name + "'");
    }
    const LatticeSet total = sumset(sumset(c.a1, c.a2, max_points), u, max_points);
    const Int ts = static_cast<unsigned long>(total.size());
    const Rat squared =
        make_rat(ts * ts, Int(static_cast<unsigned long>(c.a1.size())) *
                              Int(static_cast<unsigned long>(c.a2.size())));
    if (!have || squared < best.squared_ratio) {
      best.squared_ratio = squared;
      best.witness = c.name;
      best.sum_size = ts;
      have = true;
    }
  }
  return best;
}

std::vector<BetaCandidate> default_beta_candidates(const LatticeSet& u, std::uint64_t seed,
                                                   std::size_t budget_points) {
  const int d = u.dimension();
  std::vector<BetaCandidate> out;
  LatticeSet origin(d, std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
  out.push_back({"origin", origin, origin});
  out.push_back({"self", u, u});
  // Axis and diagonal progressions of growing length.
  for (unsigned long m : {2UL, 4UL, 8UL, 16UL, 32UL}) {
    std::vector<Int> axis_flat, diag_flat;
    for (unsigned long i = 0; i < m; ++i) {
      for (int j = 0; j < d; ++j) {
        axis_flat.emplace_back(j == 0 ? Int(i) : Int(0));
        diag_flat.emplace_back(i);
      }
    }
    LatticeSet axis(d, axis_flat), diag(d, diag_flat);
    out.push_back({"axis_ap_" + std::to_string(m), axis, axis});
    out.push_back({"diag_ap_" + std::to_string(m), diag, diag});
  }
  // Full boxes while the pairwise sum work stays within budget.
  for (unsigned long side = 2; side <= 6; ++side) {
    double cells = 1;
    for (int j = 0; j < d; ++j) cells *= static_cast<double>(side);
    if (cells * cells > static_cast<double>(budget_points)) break;
    LatticeSet box = lattice_cube(d, side, budget_points);
    out.push_back({"box_" + std::to_string(side), box, box});
  }
  // A few random subsets of U paired with themselves.
  std::mt19937_64 rng(seed);
  for (int r = 0; r < 3 && u.size() >= 2; ++r) {
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (rng() % 2 == 0) picked.push_back(i);
    }
    if (picked.empty()) picked.push_back(static_cast<std::size_t>(rng() % u.size()));
    LatticeSet sub = u.select(picked);
    out.push_back({"subset_" + std::to_string(r), sub, sub});
  }
  return out;
}

BetaLower beta_lower_from_tree(const LatticeSet& u) {
  if (u.empty()) throw std::invalid_argument("beta_lower_from_tree: empty set");
  const FiberTree t = build_fiber_tree(u);
  const BinarySubtreeResult bin = max_binary_subtree(t.tree, true);
  std::vector<std::size_t> picked;
  picked.reserve(bin.witness.ordinals.size());
  for (int ordinal : bin.witness.ordinals) {
    picked.push_back(leaf_point_index(t, t.tree.leaves()[ordinal]));
  }
  BetaLower out;
  out.subset = u.select(picked);
  out.lower = int_from(bin.size);
  auto cert = quasicube_subset_certificate(out.subset);
  if (!cert) {
    throw InvariantViolation(
        "beta lower bound: binary-subtree leaf set admitted no quasicube certificate");
  }
  out.certificate = std::move(*cert);
  return out;
}

BetaEstimate beta_bracket(const LatticeSet& u, std::span<const BetaCandidate> candidates,
                          std::size_t max_points) {
  BetaEstimate out{beta_lower_from_tree(u), beta_upper_search(u, candidates, max_points),
                   CheckResult{}};
  out.bracket = make_check("beta bracket: lower^2 <= searched upper (squared)",
                           Rat(out.lower.lower * out.lower.lower), "<=",
                           out.upper.squared_ratio);
  return out;
}

CheckResult doubling_consistency_check(const LatticeSet& a, std::size_t max_points) {
  if (a.empty()) throw std::invalid_argument("doubling_consistency_check: empty set");
  const FiberTree t = build_fiber_tree(a);
  const long long b = binary_subtree_values(t.tree)[t.tree.root()];
  const LatticeSet twice = sumset(a, a, max_points);
  const Int n = static_cast<unsigned long>(a.size());
  const Int s = static_cast<unsigned long>(twice.size());
  return make_check("b(T(A)) * |A|^2 <= |A+A|^2", Rat(int_from(b) * n * n), "<=", Rat(s * s));
}

}  // namespace addcomb
