#pragma once

#include <cstdint>
#include <span>

#include "grasp/algebra.hpp"
#include "grasp/omega.hpp"
#include "grasp/poly.hpp"

namespace grasp {

/// Internal control flow: the int64 kernels bail out to the exact path.
struct fast_overflow {};

inline int64_t mul_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw fast_overflow{};
  return r;
}
inline int64_t add_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw fast_overflow{};
  return r;
}

/// Small sparse element over int64 with fixed capacity; exceeding the
/// capacity falls back to the exact path.
struct FastElem {
  static constexpr int kCap = 24;
  int n = 0;
  uint32_t idx[kCap];
  int64_t c[kCap];

  void clear() { n = 0; }
  void set_basis(uint32_t i) {
    n = 1;
    idx[0] = i;
    c[0] = 1;
  }
  void add(uint32_t i, int64_t v) {
    for (int k = 0; k < n; ++k) {
      if (idx[k] == i) {
        c[k] = add_ck(c[k], v);
        if (c[k] == 0) {
          idx[k] = idx[n - 1];
          c[k] = c[n - 1];
          --n;
        }
        return;
      }
    }
    if (n == kCap) throw fast_overflow{};
    idx[n] = i;
    c[n] = v;
    ++n;
  }
};

/// Monomial evaluation on basis tuples, against one algebra. Words fold
/// left-normed through the signature's fold operation; trees follow their
/// own operations. The fast (int64) kernels throw fast_overflow when the
/// algebra has non-integer structure constants or a computation overflows.
class Evaluator {
 public:
  explicit Evaluator(const GradedAlgebra& A);

  const GradedAlgebra& algebra() const { return *A_; }
  /// Words of this length are expressible left-normed; length 1 always is.
  bool word_length_ok(size_t len) const;

  void eval_word_fast(std::span<const uint16_t> word, std::span<const uint32_t> tuple,
                      FastElem& out) const;
  void eval_tree_fast(const OmegaMonomial& t, std::span<const uint32_t> tuple,
                      FastElem& out) const;

  SparseVec eval_word_exact(std::span<const uint16_t> word,
                            std::span<const uint32_t> tuple) const;
  SparseVec eval_tree_exact(const OmegaMonomial& t, std::span<const uint32_t> tuple) const;

 private:
  const GradedAlgebra* A_;
  size_t fold_op_;
  uint32_t fold_arity_;
};

/// Exact evaluation of a polynomial on general elements (sparse vectors) of
/// A, by multilinear expansion of the structure tensors.
SparseVec eval_poly_elements(const GradedAlgebra& A, const MultilinearPoly& f,
                             std::span<const SparseVec> args);
SparseVec eval_poly_elements(const GradedAlgebra& A, const OmegaPoly& f,
                             std::span<const SparseVec> args);

/// Exact value of a polynomial on a basis tuple.
SparseVec eval_poly_basis_tuple(const GradedAlgebra& A, const MultilinearPoly& f,
                                std::span<const uint32_t> tuple);
SparseVec eval_poly_basis_tuple(const GradedAlgebra& A, const OmegaPoly& f,
                                std::span<const uint32_t> tuple);

}  // namespace grasp
