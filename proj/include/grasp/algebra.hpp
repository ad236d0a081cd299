#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grasp/rational.hpp"
#include "grasp/signature.hpp"

namespace grasp {

/// Sparse coordinate vector: (basis index, coefficient) pairs, sorted by
/// index, coefficients nonzero.
using SparseVec = std::vector<std::pair<uint32_t, Rational>>;
using FastVec64 = std::vector<std::pair<uint32_t, int64_t>>;

SparseVec sv_from_map(const std::map<uint32_t, Rational>& m);
void sv_accumulate(std::map<uint32_t, Rational>& acc, const SparseVec& v, const Rational& c);
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Rational& c);
bool sv_equal(const SparseVec& a, const SparseVec& b);
std::string sv_str(const SparseVec& v, const std::vector<std::string>& names);

/// One operation's structure tensor: packed input tuple -> sparse output.
/// Keys are strictly increasing; a missing key means the zero vector.
struct OpTensor {
  uint32_t arity = 2;
  std::vector<uint64_t> keys;
  std::vector<SparseVec> values;
  std::vector<int32_t> dense;  // key -> slot, or empty when d^arity is large

  int32_t slot(uint64_t key) const {
    if (!dense.empty()) return dense[key];
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return -1;
    return (int32_t)(it - keys.begin());
  }
  const SparseVec* find(uint64_t key) const {
    int32_t s = slot(key);
    return s < 0 ? nullptr : &values[s];
  }
};

class GradedAlgebra;

/// An element of a specific algebra: owner + sparse coordinates.
struct AlgebraElement {
  const GradedAlgebra* owner = nullptr;
  SparseVec coords;

  bool is_zero() const { return coords.empty(); }
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rational& c) const;
  bool operator==(const AlgebraElement& o) const {
    return owner == o.owner && sv_equal(coords, o.coords);
  }
};

/// A finite-dimensional Z2-graded Omega-algebra given by a parity on basis
/// vectors and one sparse multilinear structure tensor per operation. Every
/// tensor entry respects the grading: parity(output) = sum of input parities
/// mod 2 (checked at construction). Immutable after construction.
class GradedAlgebra {
 public:
  const std::string& name() const { return name_; }
  uint32_t dim() const { return dim_; }
  uint8_t parity(uint32_t i) const { return parity_[i]; }
  const std::vector<uint8_t>& parities() const { return parity_; }
  const Signature& signature() const { return sig_; }
  const OpTensor& tensor(size_t op) const { return tensors_[op]; }
  const std::vector<std::string>& basis_names() const { return names_; }

  uint32_t dim_of_parity(int p) const {
    uint32_t c = 0;
    for (uint8_t x : parity_) c += (x == p);
    return c;
  }
  const std::vector<uint32_t>& basis_of_parity(int p) const { return by_parity_[p]; }

  /// True when every tensor coefficient is an integer small enough for the
  /// int64 evaluation kernels.
  bool int64_ok() const { return int64_ok_; }
  const std::vector<FastVec64>& fast_values(size_t op) const { return fast_[op]; }

  uint64_t pack(size_t op, std::span<const uint32_t> tuple) const {
    uint64_t key = 0;
    for (uint32_t i : tuple) key = key * dim_ + i;
    return key;
  }

  AlgebraElement zero() const { return {this, {}}; }
  AlgebraElement basis_element(uint32_t i) const;
  AlgebraElement element(SparseVec v) const;

  /// Multilinear extension of the structure tensors; exact.
  /// Throws std::invalid_argument on arity mismatch or foreign elements.
  AlgebraElement apply(size_t op, std::span<const AlgebraElement> args) const;
  SparseVec apply_sparse(size_t op, std::span<const SparseVec> args) const;

  /// Associativity of the word-folding operation on all basis triples.
  bool is_associative() const;

  bool same_structure(const GradedAlgebra& o) const;

 private:
  friend class AlgebraBuilder;
  std::string name_;
  uint32_t dim_ = 0;
  std::vector<uint8_t> parity_;
  Signature sig_;
  std::vector<OpTensor> tensors_;
  std::vector<std::string> names_;
  std::vector<uint32_t> by_parity_[2];
  bool int64_ok_ = false;
  std::vector<std::vector<FastVec64>> fast_;
};

/// Accumulating builder. Usage: construct, add entries, then build(name).
/// build() checks the grading closure of every entry.
class AlgebraBuilder {
 public:
  AlgebraBuilder(uint32_t dim, std::vector<uint8_t> parity, Signature sig);

  void add(size_t op, std::span<const uint32_t> in, uint32_t out, const Rational& c);
  void set_basis_names(std::vector<std::string> names);
  std::shared_ptr<const GradedAlgebra> build(std::string name);

 private:
  uint32_t dim_;
  std::vector<uint8_t> parity_;
  Signature sig_;
  std::vector<std::map<uint64_t, std::map<uint32_t, Rational>>> entries_;
  std::vector<std::string> names_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

}  // namespace grasp
