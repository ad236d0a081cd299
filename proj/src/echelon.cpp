#include "grasp/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasp {

namespace {

size_t first_nonzero(const std::vector<Rational>& row) {
  for (size_t i = 0; i < row.size(); ++i)
    if (!row[i].is_zero()) return i;
  return row.size();
}

}  // namespace

std::vector<Rational> RowEchelon::reduce(std::vector<Rational> row) const {
  if (row.size() != width_) throw std::invalid_argument("RowEchelon: row width mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = row[pivots_[r]];
    if (c.is_zero()) continue;
    Rational f = c;  // pivot is 1
    for (size_t j = pivots_[r]; j < width_; ++j)
      if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
  }
  return row;
}

bool RowEchelon::contains(const std::vector<Rational>& row) const {
  return first_nonzero(reduce(row)) == width_;
}

bool RowEchelon::insert(std::vector<Rational> row) {
  row = reduce(std::move(row));
  size_t p = first_nonzero(row);
  if (p == width_) return false;
  Rational inv = row[p].inv();
  for (size_t j = p; j < width_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;
  // clear this column from existing rows to stay fully reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = rows_[r][p];
    if (c.is_zero()) continue;
    Rational f = c;
    for (size_t j = p; j < width_; ++j)
      if (!row[j].is_zero()) rows_[r][j] -= f * row[j];
  }
  auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  size_t slot = (size_t)(at - pivots_.begin());
  pivots_.insert(at, p);
  rows_.insert(rows_.begin() + slot, std::move(row));
  return true;
}

RowEchelon RowEchelon::nullspace() const {
  std::vector<bool> is_pivot(width_, false);
  for (size_t p : pivots_) is_pivot[p] = true;
  RowEchelon out(width_);
  for (size_t f = 0; f < width_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(width_, Rational(0));
    v[f] = Rational(1);
    for (size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace grasp
