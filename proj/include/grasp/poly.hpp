#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "grasp/rational.hpp"

namespace grasp {

/// A multilinear associative monomial of degree n: a permutation of the
/// variable indices 0..n-1.
using Word = std::vector<uint16_t>;

/// Sign (+1/-1) of a sequence of distinct values: parity of its inversions.
int perm_sign(std::span<const uint16_t> seq);

/// Multilinear polynomial in the associative word basis. Variables carry a
/// parity label (0 = even/y, 1 = odd/z); the all-even case is the ungraded
/// one and prints with x names.
class MultilinearPoly {
 public:
  explicit MultilinearPoly(uint32_t degree, std::vector<uint8_t> parities = {});

  uint32_t degree() const { return degree_; }
  const std::vector<uint8_t>& parities() const { return parities_; }
  uint8_t parity(uint16_t var) const { return parities_[var]; }
  bool graded() const;

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Adds c * word; the word must be a permutation of 0..degree-1.
  void add_term(Word w, const Rational& c);
  Rational coeff(const Word& w) const;

  MultilinearPoly operator+(const MultilinearPoly& o) const;
  MultilinearPoly operator-(const MultilinearPoly& o) const;
  MultilinearPoly operator*(const Rational& c) const;
  bool operator==(const MultilinearPoly& o) const;

 private:
  uint32_t degree_;
  std::vector<uint8_t> parities_;
  std::map<Word, Rational> terms_;
};

/// s_n = sum over all orderings with alternating sign; n! terms.
MultilinearPoly standard_poly(uint32_t n);

/// Cap_n(x_1..x_n; y_1..y_{n-1}) = sum_sigma sgn(sigma)
/// x_sigma(1) y_1 x_sigma(2) ... y_{n-1} x_sigma(n). Degree 2n-1; the
/// alternating variables are 0..n-1 and the interleaved ones n..2n-2.
MultilinearPoly capelli_poly(uint32_t n);

/// Left-normed long commutator [x_1,...,x_k].
MultilinearPoly commutator_poly(uint32_t k);

/// Product with disjoint variables: g's variables are shifted up by
/// f.degree().
MultilinearPoly poly_product(const MultilinearPoly& f, const MultilinearPoly& g);

/// Product of k disjoint copies of f.
MultilinearPoly poly_power(const MultilinearPoly& f, uint32_t k);

/// Renames variable i to perm[i]; parities follow their variables.
MultilinearPoly relabel(const MultilinearPoly& f, std::span<const uint16_t> perm);

/// Substitutes variable i by the word images[i] over fresh variables
/// 0..new_degree-1. The images must be nonempty, pairwise disjoint and cover
/// every new variable; f must be ungraded.
MultilinearPoly substitute(const MultilinearPoly& f, const std::vector<Word>& images,
                           uint32_t new_degree);

/// Relabels the parity vector (degree unchanged).
MultilinearPoly with_parities(const MultilinearPoly& f, std::vector<uint8_t> parities);

/// The coefficient twist transferring graded identities to envelope
/// identities: each monomial is scaled by the sign of the order in which its
/// odd variables occur (relative to ascending index order). Involutive.
MultilinearPoly star(const MultilinearPoly& f);

/// Exchange the positions of two variables in every monomial (their parity
/// labels travel with them). Used for alternation detection.
MultilinearPoly swap_vars(const MultilinearPoly& f, uint16_t a, uint16_t b);

/// All degree-n words (permutations of 0..n-1) in lexicographic order.
std::vector<Word> all_words(uint32_t n);

}  // namespace grasp
