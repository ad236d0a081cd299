#pragma once

#include "grasp/algebra.hpp"
#include "grasp/grassmann.hpp"

namespace grasp {

/// Exterior algebra of rank m; basis = generator subsets ordered by mask
/// value (the empty word is dropped when unital=false). Operations of arity
/// n >= 2 act as the n-fold word product; arity-0 symbols map to the unit.
AlgebraPtr make_grassmann(uint32_t m, bool unital = true, Signature sig = Signature::binary());

/// Full matrix algebra on k+l rows, graded by the k/l block split: a matrix
/// unit e_ij is even iff i and j lie on the same side. Basis is row-major.
/// Requires k >= l >= 0, k > 0.
AlgebraPtr make_M_kl(uint32_t k, uint32_t l, Signature sig = Signature::binary());

/// M_n plus a second copy scaled by a degree-1 unit eps with eps^2 = 1.
/// Basis: e_ij (even block, row-major) then eps*e_ij (odd block).
AlgebraPtr make_Mn_FZ2(uint32_t n, Signature sig = Signature::binary());

/// Upper block-triangular matrices with diagonal blocks k and l, trivially
/// graded. Requires k, l >= 1.
AlgebraPtr make_UT_kl(uint32_t k, uint32_t l, Signature sig = Signature::binary());

/// Rank-m envelope of a graded algebra: basis pairs a_i (x) w with
/// parity(a_i) = parity(w), ordered lexicographically by (algebra index,
/// word mask). Operations act componentwise with the signed word product.
/// nonunital_words=true keeps only nonempty words.
AlgebraPtr grassmann_envelope(const GradedAlgebra& A, uint32_t m, bool nonunital_words = false);

/// Doubling A (+) eps A with op(eps^i1 a_1, ..., eps^in a_n) =
/// eps^(i1+...+in) op(a_1,...,a_n); block 0 is even, block eps is odd.
/// A's own grading must be trivial unless ignore_grading is set.
AlgebraPtr tensor_fz2(const GradedAlgebra& A, bool ignore_grading = false);

/// 3-dimensional simple algebra with an antisymmetric bracket table
/// ([h,e] = 2e, [h,f] = -2f, [e,f] = h); trivially graded, non-associative.
AlgebraPtr make_sl2(Signature sig = Signature::binary());

}  // namespace grasp
