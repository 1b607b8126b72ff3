#pragma once

#include <map>
#include <vector>

#include "addcomb/check.hpp"
#include "addcomb/exactcmp.hpp"
#include "addcomb/fiber_tree.hpp"
#include "addcomb/intset.hpp"
#include "addcomb/moments.hpp"
#include "addcomb/valuation.hpp"

namespace addcomb {

/// A weighted set split by p-adic valuation: component j carries exactly the
/// support elements x with v_p(x) = j. Central object of the moment
/// inequality machinery.
struct PAdicFamily {
  Int p = 2;                               // prime
  unsigned long k = 2;                     // moment order (2k-th norms)
  std::map<long, WeightedSet> components;  // valuation j -> component

  /// Throws std::invalid_argument unless p is prime, k >= 1, every component
  /// is nonempty with positive weights, and every support element of
  /// component j has p-valuation exactly j.
  void validate() const;

  /// Pointwise sum of all components (supports are disjoint by construction).
  WeightedSet combined() const;
};

/// Outcome of the valuation-split moment inequality
///   || sum_j F_j ||_{2k}^{2k}  <=  ( C(2k,2) * sum_j ||F_j||_{2k}^2 )^k.
/// The right side involves k-th roots of rational moments, so the comparison
/// is certified through lower root brackets: the check passes only when the
/// inequality provably holds against the bracketed (smaller-or-equal) right
/// side, making a pass sound. Bracket precision escalates automatically.
struct ChangCheckOutcome {
  CheckResult powered;       // M_total <= C^k * (sum_j r_j)^k, r_j bracketed
  Rat total_moment;          // M_total = ||sum_j F_j||_{2k}^{2k}
  std::vector<Rat> component_moments;  // ||F_j||_{2k}^{2k}, ascending j
  Rat rhs_linear;            // C(2k,2) * sum_j r_j (bracketed linear form)
  bool roots_exact = false;  // every component root was exactly rational
  unsigned digits = 0;       // decimal bracket precision that decided it
};

ChangCheckOutcome chang_inequality_check(const PAdicFamily& family,
                                         std::size_t max_points = kDefaultMaxPoints);

/// Certifies the mechanism behind the moment inequality: for cross terms
/// whose 2k component indices are pairwise distinct, the two halves of the
/// convolution sum keep different p-adic valuations (each half's valuation
/// equals its smallest component index), so they can never cancel. Checks
/// every split and every support selection; lhs = tuples examined,
/// rhs = tuples verified non-cancelling. Guarded to k <= 3 and at most 4
/// components.
CheckResult orthogonality_witness(const PAdicFamily& family);

/// Moment bound certificate for a plain integer set: with q the branch depth
/// of the fiber tree of its valuation image, lambda_k is at most
/// C(2k,2)^q, certified against the additive-energy lower estimate through
///   E_k(A) <= |A|^k * bound^k.
struct LambdaCertificate {
  IntSet set;
  unsigned long k = 2;
  long long query_bound = 0;  // branch depth q of the valuation fiber tree
  Int bound;                  // C(2k,2)^q
  CheckResult energy_check;   // E_k(A) <= |A|^k * bound^k
};

LambdaCertificate lambda_certificate(const IntSet& a, unsigned long k,
                                     std::size_t max_points = kDefaultMaxPoints);

/// Subadditivity across a disjoint partition: the union's lambda_k upper
/// bound is the sum of the parts' bounds. Validates that all certificates
/// share the same k and that the parts are pairwise disjoint; returns the
/// summed bound.
Int lambda_union_bound(const std::vector<LambdaCertificate>& parts);

/// One extracted piece of a cover decomposition.
struct DecompositionPiece {
  IntSet points;
  LambdaCertificate certificate;
  std::size_t round = 0;   // halving round the piece was extracted in
  Int remainder_before;    // remainder size just before extraction
};

/// Certified cover of an integer set by low-query pieces: repeatedly extract
/// the maximum eps-low subtree of the remainder's valuation fiber tree until
/// the remainder is empty (running to exhaustion strengthens the certificate
/// versus stopping at half). Rounds mark the halvings of the remainder.
/// The aggregate sums the per-piece bounds C(2k,2)^{q_i}; the ledger records
/// the partition identity, per-round halving, per-piece extraction
/// guarantees, the aggregate energy consistency check, and informational
/// comparisons of the aggregate against the two closed-form bound shapes
///   4 * b^{1/eps} * C(2k,2)^{eps * log2 |A|}   and
///   10 * b^{1/eps} * |A|^{2 * eps * log2 k},
/// decided by interval arithmetic on log2 brackets (b = the largest binary
/// subtree value seen across iterations).
struct DecompositionCertificate {
  IntSet source;
  Eps epsilon;
  unsigned long k = 2;
  std::vector<DecompositionPiece> pieces;
  Int binary_proxy;  // max binary subtree value over all iterations
  Int aggregate;     // sum of piece bounds
  Ledger checks;
};

DecompositionCertificate cover_decomposition(const IntSet& a, Eps eps,
                                             unsigned long k,
                                             std::size_t max_points = kDefaultMaxPoints);

/// Joint sums-and-products audit of one integer set: doubling statistics,
/// the certified two-value quasicube lower bound b* for the product side,
/// exact iterated sumset and product set sizes, and a ledger tying them
/// together:
///   - for each k in k_list:  |kA| * E_k(A) >= |A|^{2k}  (exact),
///   - for each t in t_list:  |A^{(2^t-1)}| >= b*^t      (exact),
///   - informational per k >= 3: the threshold exponent
///     b(k) = c * log2 k / log2 log2 k with c = 1/10000, and whether
///     |kA| >= |A|^{b(k)} or |A^{(k)}| >= |A|^{b(k)} holds, decided by
///     interval arithmetic on log2 brackets.
struct SumProductReport {
  IntSet input;
  DoublingStats doubling;
  Int b_star;
  std::map<unsigned long, Int> ksum_sizes;     // k -> |kA|
  std::map<unsigned long, Int> product_sizes;  // t -> |A^{(2^t-1)}|
  Ledger ledger;
};

SumProductReport sum_product_report(const IntSet& a,
                                    const std::vector<unsigned long>& k_list,
                                    const std::vector<unsigned long>& t_list,
                                    std::size_t max_points = kDefaultMaxPoints);

/// Closed-form versus enumerated audit of the full smooth exponent box
/// A = {products of primes <= P with exponents <= E}:
///   |A| = (E+1)^pi(P),  |A^{(k)}| = (kE+1)^pi(P),
/// plus exact |A+A| and |A+A+A| sizes and a bracket of the ratio
/// log2 |A^{(k)}| / log2 |A|.
struct SmoothAuditReport {
  unsigned long prime_bound = 0;
  unsigned long exponent_bound = 0;
  unsigned long k = 2;
  PrimeBasis basis;
  Int size_formula;          // (E+1)^pi(P)
  Int size_enumerated;       // |A| by construction
  Int product_formula;       // (kE+1)^pi(P)
  Int product_enumerated;    // |A^{(k)}| by iterated products
  Int twofold_sum;           // |A+A|
  Int threefold_sum;         // |A+A+A|
  Rat ratio_lo, ratio_hi;    // bracket of log2|A^{(k)}| / log2|A|
  Ledger ledger;
};

SmoothAuditReport smooth_example_audit(unsigned long prime_bound,
                                       unsigned long exponent_bound,
                                       unsigned long k,
                                       std::size_t max_points = kDefaultMaxPoints);

}  // namespace addcomb
