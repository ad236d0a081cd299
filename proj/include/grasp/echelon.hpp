#pragma once

#include <cstddef>
#include <vector>

#include "grasp/rational.hpp"

namespace grasp {

/// Reduced row echelon form over the rationals, maintained incrementally.
/// Rows are normalized (pivot 1, pivot column cleared everywhere else) and
/// kept sorted by pivot column, so the row matrix is the canonical RREF of
/// the span: two spans are equal iff the matrices are identical.
class RowEchelon {
 public:
  explicit RowEchelon(size_t width) : width_(width) {}

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// Reduces the row against the current basis; inserts the remainder if
  /// nonzero. Returns true when the rank grew.
  bool insert(std::vector<Rational> row);

  /// Remainder of row after reduction (zero iff row is in the span).
  std::vector<Rational> reduce(std::vector<Rational> row) const;
  bool contains(const std::vector<Rational>& row) const;

  bool operator==(const RowEchelon& o) const {
    return width_ == o.width_ && pivots_ == o.pivots_ && rows_ == o.rows_;
  }

  /// Basis of {x : R x = 0} for this matrix viewed as constraint rows,
  /// echelonized into canonical form.
  RowEchelon nullspace() const;

 private:
  size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace grasp
