// Structured-subset extraction, the probing protocol, query complexity, and
// the induced-doubling bracket.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "addcomb/generators.hpp"
#include "addcomb/pfr.hpp"
#include "addcomb/valuation.hpp"

using namespace addcomb;

namespace {

const LatticeSet kThreePoints(2, {Int(0), Int(0), Int(0), Int(1), Int(1), Int(5)});

LatticeSet line_set(std::initializer_list<long> xs) {
  std::vector<Int> flat;
  for (long x : xs) flat.emplace_back(x);
  return LatticeSet(1, std::move(flat));
}

}  // namespace

TEST_CASE("extraction on the three-point example") {
  const ExtractionResult res = extract_structured_subset(kThreePoints, Eps(1, 1));
  CHECK(res.query_budget == 1);  // floor(log2 3)
  CHECK(res.source_size == 3);
  CHECK(res.source_binary_max == 3);  // the fiber tree is already binary
  CHECK(res.subset.size() == 2);      // best branch-depth-1 leaf subset
  CHECK(all_checks_pass(res.checks));
  REQUIRE(res.sumset_size.has_value());
  CHECK(*res.sumset_size == Int(sumset(kThreePoints, kThreePoints).size()));
}

TEST_CASE("known sumset size short-circuits but changes nothing") {
  const Int sum(static_cast<unsigned long>(sumset(kThreePoints, kThreePoints).size()));
  const ExtractionResult a = extract_structured_subset(kThreePoints, Eps(1, 2));
  const ExtractionResult b =
      extract_structured_subset(kThreePoints, Eps(1, 2), true, kDefaultMaxPoints, sum);
  CHECK(a.subset.size() == b.subset.size());
  CHECK(a.query_budget == b.query_budget);
  CHECK(*a.sumset_size == *b.sumset_size);
  CHECK(a.checks.size() == b.checks.size());
}

TEST_CASE("adaptive query complexity picks the best coordinate") {
  // Coordinate 2 separates all three points at once.
  CHECK(exact_query_complexity(kThreePoints) == 1);
  // No single coordinate separates a full square.
  CHECK(exact_query_complexity(lattice_cube(2, 2)) == 2);
  CHECK(exact_query_complexity(lattice_cube(3, 2)) == 3);
  const LatticeSet singleton(2, {Int(4), Int(9)});
  CHECK(exact_query_complexity(singleton) == 0);
}

TEST_CASE("protocol identifies every extracted element within budget") {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + static_cast<int>(rng.below(5));
    std::size_t cap = 1;  // coords lie in [0,3], so 4^d distinct points exist
    for (int j = 0; j < d; ++j) cap *= 4;
    const std::size_t count = 2 + rng.below(std::min<std::size_t>(59, cap - 1));
    const LatticeSet a = random_lattice_set(rng, d, count, 3);
    for (const Eps eps : {Eps(1, 2), Eps(1, 1)}) {
      const ExtractionResult res = extract_structured_subset(a, eps);
      REQUIRE(all_checks_pass(res.checks));
      for (std::size_t pi = 0; pi < res.subset.size(); ++pi) {
        const auto x = res.subset.point(pi);
        const QueryTranscript qt = run_query_protocol(res, x);
        REQUIRE(qt.queries.size() <= res.query_budget);
        REQUIRE(qt.identified.size() == x.size());
        REQUIRE(std::equal(qt.identified.begin(), qt.identified.end(), x.begin()));
      }
    }
  }
}

TEST_CASE("protocol rejects points outside the extracted subset") {
  const LatticeSet cube = lattice_cube(3, 2);
  const ExtractionResult res = extract_structured_subset(cube, Eps(1, 10));
  REQUIRE(res.subset.size() < cube.size());
  // Find a cube point that was not extracted.
  for (std::size_t i = 0; i < cube.size(); ++i) {
    const auto p = cube.point(i);
    bool in_subset = false;
    for (std::size_t j = 0; j < res.subset.size(); ++j) {
      const auto q = res.subset.point(j);
      if (std::equal(p.begin(), p.end(), q.begin())) in_subset = true;
    }
    if (!in_subset) {
      CHECK_THROWS_AS(run_query_protocol(res, p), std::invalid_argument);
      return;
    }
  }
  FAIL("no point outside the subset found");
}

TEST_CASE("doubling-aware guarantee holds on a progression") {
  const LatticeSet ap = line_set({0, 3, 6, 9, 12, 15, 18, 21});
  const ExtractionResult res = extract_structured_subset(ap, Eps(1, 2));
  CHECK(all_checks_pass(res.checks));
  REQUIRE(res.sumset_size.has_value());
  CHECK(*res.sumset_size == 15);
}

TEST_CASE("beta search with the identity candidate on a full square") {
  const LatticeSet u = lattice_cube(2, 2);
  std::vector<BetaCandidate> cands;
  cands.push_back({"self", u, u});
  const BetaUpper up = beta_upper_search(u, cands);
  // |U+U+U| = 16 over a 4x4 grid, so the ratio is exactly |U|^2.
  CHECK(up.squared_ratio == Rat(16));
  CHECK(up.witness == "self");
  CHECK(up.sum_size == 16);
}

TEST_CASE("certified bracket on binary cubes") {
  for (int d = 1; d <= 4; ++d) {
    const LatticeSet u = lattice_cube(d, 2);
    const BetaLower lower = beta_lower_from_tree(u);
    CHECK(lower.lower == Int(static_cast<unsigned long>(u.size())));
    const auto cands = default_beta_candidates(u, 5);
    REQUIRE_FALSE(cands.empty());
    const BetaEstimate est = beta_bracket(u, cands);
    CHECK(est.bracket.pass);
    CHECK(est.upper.squared_ratio >=
          Rat(int_from(static_cast<long long>(u.size()) * static_cast<long long>(u.size()))));
  }
}

TEST_CASE("doubling consistency on structured inputs") {
  CHECK(doubling_consistency_check(lattice_cube(3, 2)).pass);
  CHECK(doubling_consistency_check(line_set({0, 1, 2, 3, 4, 5})).pass);
  CHECK(doubling_consistency_check(valuation_map(smooth_box(3, 2)).points).pass);
}
