#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/check.hpp"
#include "addcomb/exactcmp.hpp"
#include "addcomb/fiber_tree.hpp"
#include "addcomb/lattice.hpp"
#include "addcomb/quasicube.hpp"

namespace addcomb {

/// A large structured subset A' of A with low query complexity: A' is the
/// best leaf subset of the fiber tree whose induced branching depth fits the
/// budget floor(eps*log2|A|). Carries the exact cross-powered inequality
/// witnesses instead of irrational bounds.
struct ExtractionResult {
  LatticeSet subset;
  Eps epsilon;
  unsigned long query_budget = 0;
  FiberTree tree;  // fiber tree of the subset
  long long source_binary_max = 0;
  std::size_t source_size = 0;
  std::optional<Int> sumset_size;  // |A+A| when doubling data was requested
  Ledger checks;
};

/// Builds T(A), runs the low-subtree DP at budget floor(eps*log2|A|), and
/// returns the extracted subset with its guarantees verified exactly:
/// |A'|^p * b^q >= |A|^p always, and with doubling data additionally
/// |A'|^p * |A+A|^(2q) >= |A|^(p+2q) (the powered form of |A'| >= K^(-2/eps)|A|).
/// Callers that already know |A+A| can pass it to skip the sumset.
ExtractionResult extract_structured_subset(const LatticeSet& a, Eps eps,
                                           bool with_doubling = true,
                                           std::size_t max_points = kDefaultMaxPoints,
                                           std::optional<Int> known_sumset_size = std::nullopt);

/// One run of the identification game: probes only branching coordinates.
struct QueryTranscript {
  std::vector<std::pair<int, Int>> queries;  // (coordinate, answered value)
  std::vector<Int> identified;
};

/// Walks the extraction's tree to the unique leaf matching x, charging one
/// query per branching node. x must be a point of the subset.
QueryTranscript run_query_protocol(const ExtractionResult& result,
                                   std::span<const Int> x);

/// Optimal worst-case number of coordinate probes to pin down an element of
/// A (adaptive strategy, exact minimax DP). Oracle-scale only.
int exact_query_complexity(const LatticeSet& a);

/// Candidate pair for the induced-doubling upper search.
struct BetaCandidate {
  std::string name;
  LatticeSet a1;
  LatticeSet a2;
};

/// min over candidates of |A1+A2+U|^2 / (|A1|*|A2|) — an upper bound for the
/// square of the induced doubling of U, valid only over the searched family.
struct BetaUpper {
  Rat squared_ratio;
  std::string witness;
  Int sum_size;
};

BetaUpper beta_upper_search(const LatticeSet& u, std::span<const BetaCandidate> candidates,
                            std::size_t max_points = kDefaultMaxPoints);

std::vector<BetaCandidate> default_beta_candidates(const LatticeSet& u, std::uint64_t seed,
                                                   std::size_t budget_points = 1u << 16);

/// Certified lower bound: the max binary subtree of T(U) is contained in a
/// quasicube, whose induced doubling equals its size; monotonicity lifts the
/// bound to U.
struct BetaLower {
  Int lower;
  LatticeSet subset;
  QuasicubeCertificate certificate;
};

BetaLower beta_lower_from_tree(const LatticeSet& u);

struct BetaEstimate {
  BetaLower lower;
  BetaUpper upper;
  CheckResult bracket;  // lower^2 <= upper squared ratio
};

BetaEstimate beta_bracket(const LatticeSet& u, std::span<const BetaCandidate> candidates,
                          std::size_t max_points = kDefaultMaxPoints);

/// b(T(A)) * |A|^2 <= |A+A|^2: the squared form of "the binary subtree is at
/// most the doubling constant squared".
CheckResult doubling_consistency_check(const LatticeSet& a,
                                       std::size_t max_points = kDefaultMaxPoints);

}  // namespace addcomb
