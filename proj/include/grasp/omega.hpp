#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grasp/poly.hpp"
#include "grasp/signature.hpp"

namespace grasp {

/// A monomial of the free Omega-algebra: an operation-labeled tree with
/// variable leaves, stored in preorder. Token >= 0 is a leaf variable; token
/// < 0 encodes operation index ~token. Arities come from the signature.
struct OmegaMonomial {
  std::vector<int32_t> pre;

  static OmegaMonomial leaf(uint16_t var) { return {{(int32_t)var}}; }
  static OmegaMonomial node(size_t op_index, const std::vector<OmegaMonomial>& children) {
    OmegaMonomial t;
    t.pre.push_back(~(int32_t)op_index);
    for (const auto& c : children) t.pre.insert(t.pre.end(), c.pre.begin(), c.pre.end());
    return t;
  }

  bool is_leaf() const { return pre.size() == 1 && pre[0] >= 0; }

  auto operator<=>(const OmegaMonomial&) const = default;
};

/// Leaf variables in left-to-right order. This is also the normal form of
/// the monomial in the relatively free algebra where all operations act as
/// left-normed iterated products.
Word omega_leaves(const OmegaMonomial& t);

/// Validates arities against the signature and returns the leaf count;
/// throws std::invalid_argument on malformed trees.
uint32_t omega_validate(const OmegaMonomial& t, const Signature& sig);

/// Multilinear polynomial in the Omega-monomial basis.
class OmegaPoly {
 public:
  OmegaPoly(Signature sig, uint32_t degree, std::vector<uint8_t> parities = {});

  const Signature& signature() const { return sig_; }
  uint32_t degree() const { return degree_; }
  const std::vector<uint8_t>& parities() const { return parities_; }
  uint8_t parity(uint16_t var) const { return parities_[var]; }
  bool graded() const;

  const std::map<OmegaMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(OmegaMonomial t, const Rational& c);

  OmegaPoly operator+(const OmegaPoly& o) const;
  OmegaPoly operator*(const Rational& c) const;
  bool operator==(const OmegaPoly& o) const;

 private:
  Signature sig_;
  uint32_t degree_;
  std::vector<uint8_t> parities_;
  std::map<OmegaMonomial, Rational> terms_;
};

/// All multilinear degree-n monomials over the signature, deterministically
/// ordered (shape first, then leaf permutation). The signature must have no
/// operations of arity <= 1, otherwise the space is infinite. Throws
/// resource errors via the cap.
std::vector<OmegaMonomial> enumerate_omega_monomials(const Signature& sig, uint32_t n,
                                                     uint64_t cap);

/// Tree shapes only: each shape carries leaves labeled 0..n-1 in order.
std::vector<OmegaMonomial> enumerate_omega_shapes(const Signature& sig, uint32_t n,
                                                  uint64_t cap);

/// Replace leaf j of the shape by variable perm[j].
OmegaMonomial relabel_leaves(const OmegaMonomial& shape, std::span<const uint16_t> perm);

/// Same coefficient twist as for words; the odd-variable order is the
/// depth-first left-to-right leaf order.
OmegaPoly star(const OmegaPoly& f);

/// The word x_{w_0} ... built left-normed with the signature's fold
/// operation; throws when the length is not expressible.
OmegaMonomial left_normed_tree(const Signature& sig, const Word& w);

}  // namespace grasp
