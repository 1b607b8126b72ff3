// Valuation machinery, the moment inequality, certificates, covers, and the
// sums-and-products audits.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "addcomb/chang.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/valuation.hpp"

using namespace addcomb;

namespace {

IntSet ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return IntSet(std::move(v));
}

PAdicFamily worked_family() {
  PAdicFamily fam;
  fam.p = 2;
  fam.k = 2;
  fam.components.emplace(0L, WeightedSet({{Int(1), Rat(1)}}));
  fam.components.emplace(1L, WeightedSet({{Int(2), Rat(1)}}));
  return fam;
}

}  // namespace

TEST_CASE("valuation images and inverses") {
  const IntSet a = ints({6, 10, 15});
  const ValuationImage vi = valuation_map(a);
  REQUIRE(vi.basis.primes == std::vector<Int>{2, 3, 5});
  CHECK(vi.points.size() == 3);
  CHECK(valuation_inverse(vi.points, vi.basis) == a);

  CHECK(valuation_point(Int(12), vi.basis) == std::vector<Int>{2, 1, 0});
  CHECK_THROWS_AS(valuation_point(Int(7), vi.basis), std::invalid_argument);

  const std::vector<Int> p = {Int(2), Int(1), Int(0)};
  CHECK(element_of_point(p, vi.basis) == 12);
}

TEST_CASE("products become sums under the valuation map") {
  const IntSet a = ints({2, 3});
  const IntSet b = ints({4, 9});
  const IntSet prod = product_set(a, b);
  const ValuationImage via = valuation_map(a);
  const ValuationImage vib = valuation_map(b);
  const PrimeBasis common = union_basis(via.basis, vib.basis);
  const LatticeSet ea = embed_in_basis(via.points, via.basis, common);
  const LatticeSet eb = embed_in_basis(vib.points, vib.basis, common);
  const LatticeSet sum = sumset(ea, eb);
  CHECK(valuation_inverse(sum, common) == prod);
}

TEST_CASE("prime tooling") {
  CHECK(primes_up_to(20) ==
        std::vector<Int>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(smooth_box(3, 1) == ints({1, 2, 3, 6}));
  CHECK(smooth_box(2, 3) == ints({1, 2, 4, 8}));
  CHECK_THROWS_AS(smooth_box(50, 3, 10), ResourceLimitError);
  CHECK_THROWS_AS(smooth_box(1, 2), std::invalid_argument);
}

TEST_CASE("family validation rejects mislabeled levels and bad parameters") {
  PAdicFamily good = worked_family();
  CHECK_NOTHROW(good.validate());
  CHECK(good.combined().support_size() == 2);

  PAdicFamily wrong_level;
  wrong_level.p = 2;
  wrong_level.k = 2;
  wrong_level.components.emplace(0L, WeightedSet({{Int(2), Rat(1)}}));
  CHECK_THROWS_AS(wrong_level.validate(), std::invalid_argument);

  PAdicFamily composite = worked_family();
  composite.p = 4;
  CHECK_THROWS_AS(composite.validate(), std::invalid_argument);

  PAdicFamily zero_order = worked_family();
  zero_order.k = 0;
  CHECK_THROWS_AS(zero_order.validate(), std::invalid_argument);
}

TEST_CASE("worked moment instance: 6 against linear bound 12") {
  const ChangCheckOutcome out = chang_inequality_check(worked_family());
  CHECK(out.total_moment == Rat(6));
  CHECK(out.component_moments == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(out.rhs_linear == Rat(12));
  CHECK(out.roots_exact);
  CHECK(out.powered.pass);
  CHECK(out.powered.lhs == Rat(6));
  CHECK(out.powered.rhs == Rat(144));
  CHECK(out.powered.relation == "<=");
}

TEST_CASE("moment inequality is scale-covariant") {
  PAdicFamily fam = worked_family();
  for (auto& [j, w] : fam.components) w = w.scaled(Rat(1, 2));
  const ChangCheckOutcome out = chang_inequality_check(fam);
  CHECK(out.total_moment == Rat(3, 8));
  CHECK(out.rhs_linear == Rat(3));
  CHECK(out.powered.pass);
}

TEST_CASE("irrational component roots still produce a sound pass") {
  PAdicFamily fam;
  fam.p = 2;
  fam.k = 2;
  fam.components.emplace(0L, WeightedSet::unit(ints({1, 3})));
  const ChangCheckOutcome out = chang_inequality_check(fam);
  CHECK(out.total_moment == Rat(6));  // E_2({1,3})
  CHECK_FALSE(out.roots_exact);
  CHECK(out.powered.pass);
  // The bracketed bound sits below the true value 6*sqrt(6) but within 10^-9.
  CHECK(out.rhs_linear < Rat(6) * Rat(2449489743, 1000000000));
  CHECK(out.rhs_linear >= Rat(6) * Rat(2449489742, 1000000000));
}

TEST_CASE("cross terms with distinct levels cannot cancel") {
  const CheckResult w = orthogonality_witness(worked_family());
  CHECK(w.pass);
  CHECK(w.lhs == w.rhs);  // every examined tuple verified

  PAdicFamily three;
  three.p = 3;
  three.k = 2;
  three.components.emplace(0L, WeightedSet::unit(ints({1, 2})));
  three.components.emplace(1L, WeightedSet::unit(ints({3, 6})));
  three.components.emplace(2L, WeightedSet::unit(ints({9})));
  CHECK(orthogonality_witness(three).pass);
}

TEST_CASE("moment bound certificate for a geometric progression") {
  const IntSet gp = gp_set(1, 2, 8);
  const LambdaCertificate cert = lambda_certificate(gp, 2);
  CHECK(cert.query_bound == 1);
  CHECK(cert.bound == 6);
  CHECK(cert.energy_check.pass);
  CHECK(cert.energy_check.lhs == Rat(120));   // E_2 of the progression
  CHECK(cert.energy_check.rhs == Rat(2304));  // 8^2 * 6^2
}

TEST_CASE("certificates add across disjoint parts") {
  const LambdaCertificate a = lambda_certificate(ints({1, 2, 4}), 2);
  const LambdaCertificate b = lambda_certificate(ints({3, 9}), 2);
  CHECK(lambda_union_bound({a, b}) == a.bound + b.bound);

  const LambdaCertificate overlap = lambda_certificate(ints({2, 3}), 2);
  CHECK_THROWS_AS(lambda_union_bound({a, overlap}), std::invalid_argument);

  const LambdaCertificate other_k = lambda_certificate(ints({3, 9}), 3);
  CHECK_THROWS_AS(lambda_union_bound({a, other_k}), std::invalid_argument);
}

TEST_CASE("cover decomposition partitions and certifies") {
  const IntSet gp = gp_set(1, 2, 8);
  const DecompositionCertificate cover = cover_decomposition(gp, Eps(1, 2), 2);
  CHECK(cover.pieces.size() == 1);
  CHECK(cover.aggregate == 6);
  CHECK(all_checks_pass(cover.checks));

  const IntSet mixed = ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 18, 20, 24, 30});
  const DecompositionCertificate cm = cover_decomposition(mixed, Eps(1, 2), 2);
  CHECK(all_checks_pass(cm.checks));
  // Pieces partition the source.
  IntSet reunion;
  Int total = 0;
  for (const auto& piece : cm.pieces) {
    CHECK(reunion.disjoint_from(piece.points));
    reunion = reunion.unions(piece.points);
    total += Int(static_cast<unsigned long>(piece.points.size()));
  }
  CHECK(reunion == mixed);
  CHECK(total == Int(static_cast<unsigned long>(mixed.size())));
  // Informational closed-form rows are present but non-binding.
  int informational = 0;
  for (const CheckResult& row : cm.checks) informational += row.informational ? 1 : 0;
  CHECK(informational == 2);
}

TEST_CASE("sums-and-products report on the worked progression") {
  const SumProductReport rep = sum_product_report(gp_set(1, 2, 8), {2}, {2, 3});
  CHECK(rep.b_star == 2);
  CHECK(rep.ksum_sizes.at(2) == 36);
  CHECK(rep.product_sizes.at(2) == 22);  // |A^(3)|
  CHECK(rep.product_sizes.at(3) == 50);  // |A^(7)|
  CHECK(all_checks_pass(rep.ledger));
}

TEST_CASE("threshold rows for k >= 3 are informational") {
  const SumProductReport rep = sum_product_report(ints({1, 2, 3}), {3}, {2});
  CHECK(all_checks_pass(rep.ledger));
  bool saw_informational = false;
  for (const CheckResult& row : rep.ledger) saw_informational |= row.informational;
  CHECK(saw_informational);
}

TEST_CASE("smooth box audit closed forms match enumeration") {
  const SmoothAuditReport small = smooth_example_audit(3, 2, 2);
  CHECK(small.size_formula == 9);
  CHECK(small.size_enumerated == 9);
  CHECK(small.product_formula == 25);
  CHECK(small.product_enumerated == 25);
  CHECK(all_checks_pass(small.ledger));
  CHECK(small.ratio_lo <= small.ratio_hi);
  CHECK(small.ratio_lo >= 1);
  CHECK(small.ratio_hi <= 2);

  const SmoothAuditReport big = smooth_example_audit(5, 3, 3);
  CHECK(big.size_enumerated == 64);
  CHECK(big.product_enumerated == 1000);
  CHECK(big.twofold_sum > 64);
  CHECK(all_checks_pass(big.ledger));
}
