#pragma once

#include <optional>

#include "grasp/config.hpp"
#include "grasp/eval.hpp"

namespace grasp {

struct Witness {
  std::vector<uint32_t> tuple;  // basis indices, one per variable
  SparseVec value;              // nonzero, re-checked through the exact path
  std::vector<std::string> tuple_names(const GradedAlgebra& A) const;
};

struct IdentityVerdict {
  bool holds = false;
  std::optional<Witness> witness;
  /// Position of the witness in the canonical scan order (+1), or the full
  /// scan size when the identity holds. Stable across parallel widths.
  uint64_t tuples_evaluated = 0;
  uint64_t term_evaluations = 0;
};

/// Decides whether f vanishes on A by exhaustive evaluation over basis
/// tuples, which is complete for multilinear f. Variables alternating as a
/// block are restricted to strictly increasing tuples (value-preserving).
/// The input must be ungraded. Throws resource_cap_error past the caps.
IdentityVerdict is_identity(const MultilinearPoly& f, const GradedAlgebra& A,
                            const RunConfig& cfg = {}, bool prune = true);
IdentityVerdict is_identity(const OmegaPoly& f, const GradedAlgebra& A,
                            const RunConfig& cfg = {}, bool prune = true);

/// Graded variant: tuples range over homogeneous basis elements matching
/// each variable's parity.
IdentityVerdict is_graded_identity(const MultilinearPoly& f, const GradedAlgebra& A,
                                   const RunConfig& cfg = {}, bool prune = true);
IdentityVerdict is_graded_identity(const OmegaPoly& f, const GradedAlgebra& A,
                                   const RunConfig& cfg = {}, bool prune = true);

/// Maximal groups of same-parity variables in which f alternates (swapping
/// any two members negates f). Groups of size >= 2 only.
std::vector<std::vector<uint16_t>> alternating_blocks(const MultilinearPoly& f);
std::vector<std::vector<uint16_t>> alternating_blocks(const OmegaPoly& f);

}  // namespace grasp
