#include "addcomb/suite.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "addcomb/chang.hpp"
#include "addcomb/exactcmp.hpp"
#include "addcomb/fiber_tree.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/io.hpp"
#include "addcomb/lattice.hpp"
#include "addcomb/moments.hpp"
#include "addcomb/pfr.hpp"
#include "addcomb/quasicube.hpp"
#include "addcomb/tree.hpp"
#include "addcomb/tree_stats.hpp"
#include "addcomb/valuation.hpp"

namespace addcomb {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Every item draws from its own stream so items stay independent of the
/// order they run in and of which subset was selected.
Rng item_rng(const RunConfig& cfg, const std::string& id) {
  return Rng(cfg.seed ^ fnv1a(id));
}

CheckResult count_row(const std::string& claim, long long passed, long long checked) {
  return make_check(claim, Rat(int_from(passed)), "==", Rat(int_from(checked)));
}

CheckResult bool_row(const std::string& claim, bool ok) {
  return make_check(claim, Rat(ok ? 1L : 0L), "==", Rat(1L));
}

LatticeSet line_set(const IntSet& a) {
  std::vector<Int> flat(a.elements());
  return LatticeSet(1, std::move(flat));
}

// ---------------------------------------------------------------------------
// 1. tree_alternative: the low-subtree DP value D at budget floor(eps*log2 N)
// satisfies D * b^(1/eps) >= N (cross-powered), and the constructive
// decomposition replay reaches a set of the same guarantee.
Ledger item_tree_alternative(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "tree_alternative");
  const std::vector<Eps> eps_list = {{1, 10}, {1, 4}, {1, 2}, {3, 4}, {1, 1}};
  const int kTrees = 1000;

  std::vector<long long> checked(eps_list.size(), 0);
  std::vector<long long> ok_dp(eps_list.size(), 0);
  std::vector<long long> ok_dec(eps_list.size(), 0);

  for (int i = 0; i < kTrees; ++i) {
    RandomTreeSpec ts;
    ts.nodes = 1 + static_cast<int>(rng.below(4096));
    ts.max_arity = 2 + static_cast<int>(rng.below(5));
    ts.max_depth = 4 + static_cast<int>(rng.below(14));
    ts.seed = rng.raw();
    const Tree t = random_tree(ts);

    const long long b = binary_subtree_values(t)[t.root()];
    const Int n(t.leaf_count());
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
      const Eps eps = eps_list[e];
      const int budget = static_cast<int>(floor_eps_log2(n, eps));
      const LowSubtreeResult low = max_low_subtree(t, budget, false);
      ++checked[e];
      if (depth_product_covers(int_from(low.size), int_from(b), n, eps)) ++ok_dp[e];
      const LeafSubset w = constructive_decompose(t, eps);
      const Int wsize(static_cast<unsigned long>(w.ordinals.size()));
      if (depth_product_covers(wsize, int_from(b), n, eps)) ++ok_dec[e];
    }
  }

  Ledger led;
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    const std::string tag = " [eps=" + eps_list[e].str() + ", trees=1000]";
    led.push_back(count_row("depth-budgeted subtree covers the leaf count" + tag,
                            ok_dp[e], checked[e]));
    led.push_back(count_row("constructive decomposition reaches the same cover" + tag,
                            ok_dec[e], checked[e]));
  }
  return led;
}

// ---------------------------------------------------------------------------
// 2. dp_vs_oracle: both DPs agree with the exhaustive subset oracle on
// values and on lexicographically-least witnesses.
Ledger item_dp_vs_oracle(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "dp_vs_oracle");
  const int kShapes = 10000;
  const int oml = cfg.oracle_max_leaves;
  const int lo = std::min(4, oml);

  long long checked = 0;
  long long agree = 0;
  for (int i = 0; i < kShapes; ++i) {
    const int cap = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(oml - lo + 1)));
    Tree t;
    for (int tries = 0;; ++tries) {
      RandomTreeSpec ts;
      // After enough misses shrink the node budget so acceptance is certain.
      const int span = tries < 20 ? 2 * cap : cap;
      ts.nodes = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
      ts.max_arity = 2 + static_cast<int>(rng.below(3));
      ts.max_depth = 2 + static_cast<int>(rng.below(8));
      ts.seed = rng.raw();
      t = random_tree(ts);
      if (t.leaf_count() <= cap) break;
    }

    const BruteForceStats bf = brute_force_tree_stats(t);
    bool good = true;

    const BinarySubtreeResult bin = max_binary_subtree(t, true);
    good = good && bin.size == bf.binary_max &&
           bin.witness.ordinals == bf.binary_witness.ordinals;

    const int bd = branch_depth(t);
    for (int q = 0; q <= bd && good; ++q) {
      const LowSubtreeResult low = max_low_subtree(t, q, true);
      good = good && low.size == bf.low_max[q] &&
             low.witness.ordinals == bf.low_witness[q].ordinals;
    }

    ++checked;
    if (good) ++agree;
  }

  Ledger led;
  led.push_back(count_row(
      "subtree DPs match the exhaustive oracle, values and witnesses "
      "[10000 shapes, <= " + std::to_string(oml) + " leaves]",
      agree, checked));
  return led;
}

// ---------------------------------------------------------------------------
// 3. query_pfr_end_to_end: extraction guarantees verify on random lattice
// sets, and the probing protocol identifies every extracted point within the
// query budget.
Ledger item_query_pfr_end_to_end(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "query_pfr_end_to_end");
  const int kSets = 200;
  const std::vector<Eps> eps_list = {{1, 2}, {1, 1}};
  // Coordinate bounds per dimension keeping capacity comfortably above the
  // largest requested point count (512).
  const long long bound_by_dim[8] = {1024, 63, 15, 7, 3, 3, 2, 2};

  long long checked = 0;
  long long ok_extract = 0;
  long long ok_protocol = 0;

  for (int i = 0; i < kSets; ++i) {
    const int d = 1 + static_cast<int>(rng.below(8));
    const std::size_t count = 1 + rng.below(1 + rng.below(512));
    const LatticeSet a = random_lattice_set(rng, d, count, bound_by_dim[d - 1]);
    const Int sum_size(static_cast<unsigned long>(sumset(a, a, cfg.max_points).size()));

    for (const Eps eps : eps_list) {
      ++checked;
      const ExtractionResult res =
          extract_structured_subset(a, eps, true, cfg.max_points, sum_size);
      if (all_checks_pass(res.checks)) ++ok_extract;

      bool identified = true;
      for (std::size_t pi = 0; pi < res.subset.size() && identified; ++pi) {
        const auto x = res.subset.point(pi);
        const QueryTranscript qt = run_query_protocol(res, x);
        identified = qt.queries.size() <= res.query_budget &&
                     qt.identified.size() == x.size() &&
                     std::equal(qt.identified.begin(), qt.identified.end(), x.begin());
      }
      if (identified) ++ok_protocol;
    }
  }

  Ledger led;
  led.push_back(count_row(
      "extraction guarantees verified exactly [200 sets, eps in {1/2, 1}]",
      ok_extract, checked));
  led.push_back(count_row(
      "probing protocol identified every extracted point within budget",
      ok_protocol, checked));
  return led;
}

// ---------------------------------------------------------------------------
// 4. chang_inequality: the valuation-split moment inequality on random
// families, the frozen worked instance, and a corrupted-family rejection.
Ledger item_chang_inequality(const RunConfig& cfg, const GoldenValues& golden) {
  Rng rng = item_rng(cfg, "chang_inequality");
  const long long primes[3] = {2, 3, 5};
  const int kFamilies = 200;

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kFamilies; ++i) {
    const long long p = primes[rng.below(3)];
    PAdicFamily fam;
    fam.p = int_from(p);
    fam.k = 2 + rng.below(2);

    const std::size_t parts = 1 + rng.below(4);
    std::set<long> levels;
    while (levels.size() < parts) levels.insert(static_cast<long>(rng.below(6)));
    for (long j : levels) {
      std::map<Int, Rat> entries;
      const std::size_t support = 1 + rng.below(4);
      while (entries.size() < support) {
        const long long u = 1 + static_cast<long long>(rng.below(60));
        if (u % p == 0) continue;
        const Int x = pow_int(fam.p, static_cast<unsigned long>(j)) * int_from(u);
        entries[x] = Rat(static_cast<long>(1 + rng.below(5)));
      }
      fam.components.emplace(j, WeightedSet(entries));
    }

    ++checked;
    const ChangCheckOutcome outcome = chang_inequality_check(fam, cfg.max_points);
    if (outcome.powered.pass) ++ok;
  }

  Ledger led;
  led.push_back(count_row(
      "valuation-split moment inequality certified [200 families, p in {2,3,5}, k in {2,3}]",
      ok, checked));

  PAdicFamily worked;
  worked.p = 2;
  worked.k = 2;
  worked.components.emplace(0L, WeightedSet({{Int(1), Rat(1)}}));
  worked.components.emplace(1L, WeightedSet({{Int(2), Rat(1)}}));
  const ChangCheckOutcome wo = chang_inequality_check(worked, cfg.max_points);
  led.push_back(make_check("worked family: total moment matches frozen value",
                           wo.total_moment, "==", Rat(golden.at("chang_worked_lhs"))));
  led.push_back(make_check("worked family: bracketed linear bound matches frozen value",
                           wo.rhs_linear, "==", Rat(golden.at("chang_worked_rhs"))));
  led.push_back(wo.powered);

  bool rejected = false;
  try {
    PAdicFamily bad;
    bad.p = 2;
    bad.k = 2;
    bad.components.emplace(0L, WeightedSet({{Int(2), Rat(1)}}));  // wrong level
    chang_inequality_check(bad, cfg.max_points);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  led.push_back(bool_row("family with a mislabeled valuation level is rejected", rejected));
  return led;
}

// ---------------------------------------------------------------------------
// 5. lambda_complexity: the moment-bound certificate holds on random integer
// sets, with the bound reproducible from the branch depth.
Ledger item_lambda_complexity(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "lambda_complexity");
  const int kSets = 100;

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kSets; ++i) {
    const std::size_t count = 1 + rng.below(64);
    const IntSet a = random_int_set(rng, count, 2000);
    for (unsigned long k = 2; k <= 3; ++k) {
      ++checked;
      const LambdaCertificate cert = lambda_certificate(a, k, cfg.max_points);
      const Int base(static_cast<unsigned long>(k * (2 * k - 1)));
      const bool reproduced =
          cert.bound == pow_int(base, static_cast<unsigned long>(cert.query_bound));
      if (cert.energy_check.pass && reproduced) ++ok;
    }
  }

  Ledger led;
  led.push_back(count_row(
      "energy stays below the certified moment bound [100 sets, k in {2,3}]",
      ok, checked));
  return led;
}

// ---------------------------------------------------------------------------
// 6. quasicube_rate: every max-binary-subtree witness, read back as a point
// set, carries a replayable quasicube certificate.
Ledger item_quasicube_rate(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "quasicube_rate");
  const int kTrees = 100;

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kTrees; ++i) {
    LatticeSet u;
    switch (rng.below(4)) {
      case 0: {
        const int d = 1 + static_cast<int>(rng.below(5));
        const long long bound = d <= 2 ? 15 : 3;
        const std::size_t count = 1 + rng.below(48);
        const Int capacity = pow_int(int_from(bound + 1), static_cast<unsigned long>(d));
        const std::size_t usable =
            capacity < int_from(static_cast<long long>(count))
                ? static_cast<std::size_t>(capacity.get_ui())
                : count;
        u = random_lattice_set(rng, d, usable, bound);
        break;
      }
      case 1:
        u = lattice_cube(1 + static_cast<int>(rng.below(4)), 2);
        break;
      case 2: {
        const IntSet a = random_int_set(rng, 1 + rng.below(48), 3000);
        u = valuation_map(a).points;
        break;
      }
      default: {
        const IntSet box = smooth_box(5, 2);
        std::vector<Int> keep;
        for (const Int& x : box.elements()) {
          if (rng.below(2) == 0) keep.push_back(x);
        }
        if (keep.empty()) keep.push_back(box.elements()[rng.below(box.size())]);
        u = valuation_map(IntSet(std::move(keep))).points;
        break;
      }
    }

    const FiberTree ft = build_fiber_tree(u);
    const BinarySubtreeResult bin = max_binary_subtree(ft.tree, true);
    std::vector<std::size_t> indices;
    indices.reserve(bin.witness.ordinals.size());
    for (int ord : bin.witness.ordinals) {
      indices.push_back(leaf_point_index(ft, ft.tree.leaves()[ord]));
    }
    std::sort(indices.begin(), indices.end());
    const LatticeSet sub = ft.points.select(indices);

    ++checked;
    const auto cert = quasicube_subset_certificate(sub);
    if (cert.has_value() && replay_certificate(sub, *cert)) ++ok;
  }

  Ledger led;
  led.push_back(count_row(
      "max binary subtree witnesses admit replayable quasicube certificates [100 trees]",
      ok, checked));
  return led;
}

// ---------------------------------------------------------------------------
// 7. doubling_consistency: b(T(A)) * |A|^2 <= |A+A|^2 on random and
// structured lattice sets.
Ledger item_doubling_consistency(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "doubling_consistency");
  const int kSets = 500;

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kSets; ++i) {
    const int d = 1 + static_cast<int>(rng.below(4));
    const long long bound_by_dim[4] = {512, 31, 15, 7};
    const std::size_t count = 1 + rng.below(128);
    const LatticeSet a = random_lattice_set(rng, d, count, bound_by_dim[d - 1]);
    ++checked;
    if (doubling_consistency_check(a, cfg.max_points).pass) ++ok;
  }
  Ledger led;
  led.push_back(count_row(
      "binary subtree value bounded by squared doubling [500 random lattice sets]",
      ok, checked));

  std::vector<std::pair<std::string, LatticeSet>> structured;
  structured.emplace_back("arithmetic progression", line_set(ap_set(5, 7, 40)));
  structured.emplace_back("binary cube d=4", lattice_cube(4, 2));
  structured.emplace_back("ternary cube d=2", lattice_cube(2, 3));
  {
    GeneratorSpec spec;
    spec.kind = "dilate_union";
    spec.params = {{"len", 12}, {"q1", 5}, {"q2", 9}};
    structured.emplace_back("dilated union", line_set(generate(spec).ints()));
  }
  structured.emplace_back("smooth box image (3,2)", valuation_map(smooth_box(3, 2)).points);
  structured.emplace_back("smooth box image (5,2)", valuation_map(smooth_box(5, 2)).points);
  structured.emplace_back("geometric progression image", valuation_map(gp_set(3, 2, 20)).points);

  long long s_checked = 0;
  long long s_ok = 0;
  for (const auto& [name, u] : structured) {
    (void)name;
    ++s_checked;
    if (doubling_consistency_check(u, cfg.max_points).pass) ++s_ok;
  }
  led.push_back(count_row(
      "binary subtree value bounded by squared doubling [structured generators]",
      s_ok, s_checked));
  return led;
}

// ---------------------------------------------------------------------------
// 8. iterated_beta: iterated product sets dominate powers of the certified
// two-value base, on multiplicatively structured corpora plus the frozen
// geometric-progression instance.
Ledger item_iterated_beta(const RunConfig& cfg, const GoldenValues& golden) {
  Rng rng = item_rng(cfg, "iterated_beta");
  const int kSets = 100;
  const std::vector<unsigned long> k_list = {2};
  const std::vector<unsigned long> t_list = {2, 3};

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kSets; ++i) {
    IntSet a;
    switch (rng.below(3)) {
      case 0:
      case 1: {
        const IntSet box = smooth_box(rng.below(2) == 0 ? 5 : 3, rng.below(2) == 0 ? 2 : 3);
        std::vector<Int> keep;
        for (const Int& x : box.elements()) {
          if (rng.below(2) == 0) keep.push_back(x);
        }
        if (keep.empty()) keep.push_back(box.elements()[rng.below(box.size())]);
        a = IntSet(std::move(keep));
        break;
      }
      default: {
        const Int start(static_cast<unsigned long>(1 + rng.below(3)));
        const Int ratio(static_cast<unsigned long>(2 + rng.below(2)));
        a = gp_set(start, ratio, 1 + rng.below(7));
        break;
      }
    }
    ++checked;
    const SumProductReport rep = sum_product_report(a, k_list, t_list, cfg.max_points);
    if (all_checks_pass(rep.ledger)) ++ok;
  }

  Ledger led;
  led.push_back(count_row(
      "iterated products dominate powers of the certified base [100 sets]",
      ok, checked));

  const IntSet gp8 = gp_set(1, 2, 8);
  const SumProductReport rep8 = sum_product_report(gp8, k_list, t_list, cfg.max_points);
  led.push_back(make_check("worked progression: certified base equals 2",
                           Rat(rep8.b_star), "==", Rat(2L)));
  led.push_back(make_check("worked progression: threefold product size matches frozen value",
                           Rat(rep8.product_sizes.at(2)), "==",
                           Rat(golden.at("gp8_product3"))));
  led.push_back(make_check("worked progression: sevenfold product size matches frozen value",
                           Rat(rep8.product_sizes.at(3)), "==",
                           Rat(golden.at("gp8_product7"))));
  append_ledger(led, rep8.ledger);
  return led;
}

// ---------------------------------------------------------------------------
// 9. smooth_audit: closed forms agree with enumeration on the smooth
// exponent box, with frozen sizes for the (5,3,3) instance.
Ledger item_smooth_audit(const RunConfig& cfg, const GoldenValues& golden) {
  Ledger led;
  const SmoothAuditReport rep = smooth_example_audit(5, 3, 3, cfg.max_points);
  append_ledger(led, rep.ledger);
  led.push_back(make_check("smooth box size matches frozen value",
                           Rat(rep.size_enumerated), "==",
                           Rat(golden.at("smooth_box_size"))));
  led.push_back(make_check("threefold product size matches frozen value",
                           Rat(rep.product_enumerated), "==",
                           Rat(golden.at("smooth_box_product3"))));
  led.push_back(make_informational("twofold sumset size, reported exactly",
                                   Rat(rep.twofold_sum), "==", Rat(rep.twofold_sum)));

  const IntSet tiny = smooth_box(3, 1);
  led.push_back(bool_row("smallest nontrivial box enumerates {1,2,3,6}",
                         tiny == IntSet({Int(1), Int(2), Int(3), Int(6)})));
  return led;
}

// ---------------------------------------------------------------------------
// 10. moment_oracle: the convolution-based moment engine agrees with a
// direct 2k-tuple count and with the energy accessor.
Ledger item_moment_oracle(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "moment_oracle");
  const int kSets = 200;

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kSets; ++i) {
    const std::size_t count = 1 + rng.below(8);
    const IntSet a = random_int_set(rng, count, 40);
    const std::size_t n = a.size();
    for (unsigned long k = 1; k <= 3; ++k) {
      ++checked;

      // Direct oracle: enumerate every k-tuple sum, then count equal pairs.
      std::vector<Int> sums;
      std::vector<std::size_t> odo(k, 0);
      for (;;) {
        Int s = 0;
        for (std::size_t j = 0; j < k; ++j) s += a.elements()[odo[j]];
        sums.push_back(s);
        std::size_t pos = 0;
        while (pos < k && ++odo[pos] == n) {
          odo[pos] = 0;
          ++pos;
        }
        if (pos == k) break;
      }
      Int direct = 0;
      for (const Int& s1 : sums) {
        for (const Int& s2 : sums) {
          if (s1 == s2) ++direct;
        }
      }

      const Int energy = additive_energy(a, k, cfg.max_points);
      const MomentValue moment = weighted_moment(WeightedSet::unit(a), k, cfg.max_points);
      if (energy == direct && moment.value == Rat(direct)) ++ok;
    }
  }

  Ledger led;
  led.push_back(count_row(
      "moment engine agrees with direct 2k-tuple enumeration [200 sets, k <= 3]",
      ok, checked));
  return led;
}

// ---------------------------------------------------------------------------
// 11. beta_falsification: on subsets of binary cubes the certified lower
// bound equals the set size and no searched candidate drops below its square.
Ledger item_beta_falsification(const RunConfig& cfg, const GoldenValues&) {
  Rng rng = item_rng(cfg, "beta_falsification");
  const int kSubsets = 50;

  long long checked = 0;
  long long ok = 0;
  for (int i = 0; i < kSubsets; ++i) {
    const int d = 1 + static_cast<int>(rng.below(6));
    const LatticeSet cube = lattice_cube(d, 2);
    std::vector<std::size_t> members;
    for (std::size_t idx = 0; idx < cube.size(); ++idx) {
      if (rng.below(2) == 0) members.push_back(idx);
    }
    if (members.empty()) members.push_back(rng.below(cube.size()));
    const LatticeSet u = cube.select(members);

    const auto candidates = default_beta_candidates(u, rng.raw());
    const BetaEstimate est = beta_bracket(u, candidates, cfg.max_points);

    ++checked;
    const Int usize(static_cast<unsigned long>(u.size()));
    const bool tight_lower = est.lower.lower == usize;
    const bool no_counterexample = est.upper.squared_ratio >= Rat(usize * usize);
    if (tight_lower && no_counterexample && est.bracket.pass) ++ok;
  }

  Ledger led;
  led.push_back(count_row(
      "no candidate beat the certified square lower bound [50 binary-cube subsets]",
      ok, checked));
  return led;
}

// ---------------------------------------------------------------------------

using ItemFn = Ledger (*)(const RunConfig&, const GoldenValues&);

struct ItemEntry {
  const char* id;
  ItemFn fn;
};

// Canonical order: alphabetical by id.
constexpr ItemEntry kItems[] = {
    {"beta_falsification", item_beta_falsification},
    {"chang_inequality", item_chang_inequality},
    {"doubling_consistency", item_doubling_consistency},
    {"dp_vs_oracle", item_dp_vs_oracle},
    {"iterated_beta", item_iterated_beta},
    {"lambda_complexity", item_lambda_complexity},
    {"moment_oracle", item_moment_oracle},
    {"quasicube_rate", item_quasicube_rate},
    {"query_pfr_end_to_end", item_query_pfr_end_to_end},
    {"smooth_audit", item_smooth_audit},
    {"tree_alternative", item_tree_alternative},
};

const ItemEntry* find_item(const std::string& id) {
  for (const ItemEntry& e : kItems) {
    if (id == e.id) return &e;
  }
  return nullptr;
}

}  // namespace

GoldenValues GoldenValues::defaults() {
  GoldenValues g;
  g.values = {
      {"chang_worked_lhs", Int(6)},  {"chang_worked_rhs", Int(12)},
      {"smooth_box_size", Int(64)},  {"smooth_box_product3", Int(1000)},
      {"gp8_product3", Int(22)},     {"gp8_product7", Int(50)},
  };
  return g;
}

GoldenValues GoldenValues::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("golden file: cannot open " + path);
  GoldenValues g = defaults();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(first, last - first + 1);
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("golden file line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    std::string key = body.substr(0, eq);
    std::string value = body.substr(eq + 1);
    const auto kend = key.find_last_not_of(" \t");
    key = kend == std::string::npos ? "" : key.substr(0, kend + 1);
    const auto vstart = value.find_first_not_of(" \t");
    value = vstart == std::string::npos ? "" : value.substr(vstart);
    if (g.values.find(key) == g.values.end()) {
      throw std::invalid_argument("golden file: unknown key '" + key + "'");
    }
    try {
      g.values[key] = Int(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("golden file: bad integer for key '" + key + "'");
    }
  }
  return g;
}

const Int& GoldenValues::at(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) {
    throw std::invalid_argument("golden values: unknown key '" + key + "'");
  }
  return it->second;
}

const std::vector<std::string>& suite_item_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const ItemEntry& e : kItems) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

SuiteReport run_suite(const RunConfig& config) {
  config.validate();
  const GoldenValues golden = config.golden.empty() ? GoldenValues::defaults()
                                                    : GoldenValues::from_file(config.golden);

  std::vector<const ItemEntry*> selected;
  if (config.items.empty()) {
    for (const ItemEntry& e : kItems) selected.push_back(&e);
  } else {
    std::set<std::string> seen;
    std::vector<std::string> names(config.items);
    std::sort(names.begin(), names.end());
    for (const std::string& name : names) {
      if (!seen.insert(name).second) continue;
      const ItemEntry* e = find_item(name);
      if (e == nullptr) throw std::invalid_argument("suite: unknown item '" + name + "'");
      selected.push_back(e);
    }
  }

  SuiteReport report;
  report.config = config;
  report.items.resize(selected.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      SuiteItemResult r;
      r.id = selected[i]->id;
      try {
        r.ledger = selected[i]->fn(config, golden);
        r.pass = all_checks_pass(r.ledger);
      } catch (const std::exception& e) {
        r.pass = false;
        r.error = e.what();
      }
      report.items[i] = std::move(r);
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(hw, selected.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  report.all_pass = std::all_of(report.items.begin(), report.items.end(),
                                [](const SuiteItemResult& r) { return r.pass; });
  return report;
}

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = "addcomb-acceptance";
  j["rng"] = Rng::kAlgorithm;
  j["seed"] = report.config.seed;
  j["epsilon"] = report.config.epsilon.str();
  j["k_list"] = report.config.k_list;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const SuiteItemResult& r : report.items) {
    nlohmann::ordered_json item;
    item["id"] = r.id;
    item["pass"] = r.pass;
    if (!r.error.empty()) item["error"] = r.error;
    item["checks"] = ledger_to_json(r.ledger);
    items.push_back(std::move(item));
  }
  j["items"] = std::move(items);
  j["all_pass"] = report.all_pass;
  return j;
}

std::string report_to_table(const SuiteReport& report) {
  std::ostringstream out;
  out << "acceptance suite: " << report.items.size() << " items, seed "
      << report.config.seed << ", rng " << Rng::kAlgorithm << "\n";

  std::size_t width = 4;
  for (const SuiteItemResult& r : report.items) width = std::max(width, r.id.size());
  out << std::string(width + 26, '-') << "\n";
  for (const SuiteItemResult& r : report.items) {
    std::size_t failed = 0;
    for (const CheckResult& c : r.ledger) {
      if (!c.informational && !c.pass) ++failed;
    }
    out << r.id << std::string(width - r.id.size() + 2, ' ')
        << (r.pass ? "pass" : "FAIL") << "  (" << r.ledger.size() << " checks";
    if (failed > 0) out << ", " << failed << " failed";
    out << ")";
    if (!r.error.empty()) out << "  error: " << r.error;
    out << "\n";
  }
  out << std::string(width + 26, '-') << "\n";
  out << "overall: " << (report.all_pass ? "pass" : "FAIL") << "\n";

  for (const SuiteItemResult& r : report.items) {
    out << "\n== " << r.id << " ==\n";
    if (!r.error.empty()) out << "aborted: " << r.error << "\n";
    if (!r.ledger.empty()) out << render_ledger_table(r.ledger);
  }
  return out.str();
}

int emit_report(const SuiteReport& report) {
  if (!report.config.out_json.empty()) {
    std::ofstream f(report.config.out_json);
    if (!f) throw std::runtime_error("cannot open " + report.config.out_json);
    f << report_to_json(report).dump(2) << "\n";
  }
  if (!report.config.out_table.empty()) {
    std::ofstream f(report.config.out_table);
    if (!f) throw std::runtime_error("cannot open " + report.config.out_table);
    f << report_to_table(report);
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace addcomb
