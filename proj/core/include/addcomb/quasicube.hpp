#pragma once

#include <optional>
#include <vector>

#include "addcomb/lattice.hpp"

namespace addcomb {

/// Witness that a lattice set is contained in a quasicube: a coordinate on
/// which the set takes at most two values, and a certificate per fiber.
/// Singletons certify trivially (coord == 0, no children).
struct QuasicubeCertificate {
  int coord = 0;                               // 1-based; 0 on trivial leaves
  std::vector<Int> values;                     // distinct fiber values, ascending
  std::vector<QuasicubeCertificate> children;  // parallel to values
};

/// Backtracking search (smallest usable coordinate first, memoized failures).
/// Empty result means no certificate exists, not an error.
std::optional<QuasicubeCertificate> quasicube_subset_certificate(const LatticeSet& u);

/// Re-derives every projection claim of the certificate against `u`.
bool replay_certificate(const LatticeSet& u, const QuasicubeCertificate& cert);

}  // namespace addcomb
