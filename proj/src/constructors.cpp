#include "grasp/constructors.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasp {

namespace {

// Odometer step over tuples with a fixed radix; returns false after the last
// tuple wraps around.
bool next_tuple(std::vector<uint32_t>& t, uint32_t radix) {
  for (size_t p = t.size(); p-- > 0;) {
    if (++t[p] < radix) return true;
    t[p] = 0;
  }
  return false;
}

// Left-normed fold of a list of sparse values through a binary table given as
// a plain matrix-unit style product function.
template <typename MulFn>
std::optional<std::pair<int, uint32_t>> fold_signed(MulFn&& mul,
                                                    std::span<const uint32_t> elems) {
  // mul(a, b) -> optional<pair<sign, idx>>
  int sign = 1;
  uint32_t cur = elems[0];
  for (size_t i = 1; i < elems.size(); ++i) {
    auto r = mul(cur, elems[i]);
    if (!r) return std::nullopt;
    sign *= r->first;
    cur = r->second;
  }
  return std::make_pair(sign, cur);
}

// Fills every operation of the signature by folding a signed single-output
// binary product over each input tuple. unit_index: basis index of 1 for
// arity-0 symbols (or -1 when the algebra has no unit).
template <typename MulFn>
void fill_by_folding(AlgebraBuilder& b, const Signature& sig, uint32_t dim, MulFn&& mul,
                     int64_t unit_index) {
  for (size_t op = 0; op < sig.size(); ++op) {
    uint32_t a = sig.op(op).arity;
    if (a == 0) {
      if (unit_index < 0)
        throw std::invalid_argument("constructor: arity-0 symbol needs a unital algebra");
      b.add(op, {}, (uint32_t)unit_index, Rational(1));
      continue;
    }
    std::vector<uint32_t> tuple(a, 0);
    do {
      if (a == 1) {
        b.add(op, tuple, tuple[0], Rational(1));  // identity map, as on words
      } else if (auto r = fold_signed(mul, tuple)) {
        b.add(op, tuple, r->second, Rational(r->first));
      }
    } while (next_tuple(tuple, dim));
  }
}

}  // namespace

AlgebraPtr make_grassmann(uint32_t m, bool unital, Signature sig) {
  if (m > 20) throw std::invalid_argument("make_grassmann: rank too large");
  uint32_t words = 1u << m;
  uint32_t dim = unital ? words : words - 1;
  if (dim == 0) throw std::invalid_argument("make_grassmann: empty algebra (m=0 nonunital)");
  uint32_t off = unital ? 0 : 1;  // basis index = mask - off

  std::vector<uint8_t> parity(dim);
  std::vector<std::string> names(dim);
  for (uint32_t mask = off; mask < words; ++mask) {
    GrassmannWord w(mask, m);
    parity[mask - off] = w.parity();
    names[mask - off] = w.str();
  }

  AlgebraBuilder b(dim, parity, sig);
  b.set_basis_names(names);
  auto mul = [&](uint32_t x, uint32_t y) -> std::optional<std::pair<int, uint32_t>> {
    auto r = grassmann_mul(GrassmannWord(x + off, m), GrassmannWord(y + off, m));
    if (!r) return std::nullopt;
    if (!unital && r->word.mask == 0) return std::nullopt;  // unreachable: union of nonempty
    return std::make_pair(r->sign, r->word.mask - off);
  };
  fill_by_folding(b, sig, dim, mul, unital ? 0 : -1);

  std::string name = (unital ? "grassmann:" : "grassmann-star:") + std::to_string(m);
  return b.build(name);
}

namespace {

struct MatrixUnits {
  uint32_t n;  // side
  uint32_t index(uint32_t i, uint32_t j) const { return i * n + j; }  // 0-based, row-major
  std::string unit_name(uint32_t idx) const {
    return "e" + std::to_string(idx / n + 1) + std::to_string(idx % n + 1);
  }
  // e_ij * e_pq = [j == p] e_iq
  std::optional<std::pair<int, uint32_t>> mul(uint32_t x, uint32_t y) const {
    uint32_t i = x / n, j = x % n, p = y / n, q = y % n;
    if (j != p) return std::nullopt;
    return std::make_pair(1, index(i, q));
  }
};

}  // namespace

AlgebraPtr make_M_kl(uint32_t k, uint32_t l, Signature sig) {
  if (!(k >= l && k > 0)) throw std::invalid_argument("make_M_kl: need k >= l >= 0, k > 0");
  MatrixUnits mu{k + l};
  uint32_t dim = mu.n * mu.n;
  std::vector<uint8_t> parity(dim);
  std::vector<std::string> names(dim);
  for (uint32_t i = 0; i < mu.n; ++i)
    for (uint32_t j = 0; j < mu.n; ++j) {
      parity[mu.index(i, j)] = ((i < k) != (j < k)) ? 1 : 0;
      names[mu.index(i, j)] = mu.unit_name(mu.index(i, j));
    }
  AlgebraBuilder b(dim, parity, sig);
  b.set_basis_names(names);
  fill_by_folding(b, sig, dim, [&](uint32_t x, uint32_t y) { return mu.mul(x, y); }, -2);
  // the unit is sum of diagonal units, not a basis element; arity-0 symbols
  // are rejected for matrix constructors
  return b.build("mkl:" + std::to_string(k) + "," + std::to_string(l));
}

AlgebraPtr make_Mn_FZ2(uint32_t n, Signature sig) {
  if (n < 1) throw std::invalid_argument("make_Mn_FZ2: need n >= 1");
  MatrixUnits mu{n};
  uint32_t block = n * n, dim = 2 * block;
  std::vector<uint8_t> parity(dim);
  std::vector<std::string> names(dim);
  for (uint32_t x = 0; x < block; ++x) {
    parity[x] = 0;
    parity[block + x] = 1;
    names[x] = mu.unit_name(x);
    names[block + x] = "eps*" + mu.unit_name(x);
  }
  AlgebraBuilder b(dim, parity, sig);
  b.set_basis_names(names);
  auto mul = [&](uint32_t x, uint32_t y) -> std::optional<std::pair<int, uint32_t>> {
    uint32_t ex = x / block, ey = y / block;  // eps powers
    auto r = mu.mul(x % block, y % block);
    if (!r) return std::nullopt;
    return std::make_pair(1, ((ex + ey) & 1u) * block + r->second);
  };
  fill_by_folding(b, sig, dim, mul, -2);
  return b.build("mnfz2:" + std::to_string(n));
}

AlgebraPtr make_UT_kl(uint32_t k, uint32_t l, Signature sig) {
  if (k < 1 || l < 1) throw std::invalid_argument("make_UT_kl: need k, l >= 1");
  uint32_t n = k + l;
  MatrixUnits mu{n};
  // support: both indices in the top block, both in the bottom block, or
  // (top row, bottom column)
  std::vector<int32_t> slot(n * n, -1);
  std::vector<uint32_t> unit_of;
  std::vector<std::string> names;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      bool in = (i < k && j < k) || (i >= k && j >= k) || (i < k && j >= k);
      if (!in) continue;
      slot[mu.index(i, j)] = (int32_t)unit_of.size();
      unit_of.push_back(mu.index(i, j));
      names.push_back(mu.unit_name(mu.index(i, j)));
    }
  uint32_t dim = (uint32_t)unit_of.size();
  AlgebraBuilder b(dim, std::vector<uint8_t>(dim, 0), sig);
  b.set_basis_names(names);
  auto mul = [&](uint32_t x, uint32_t y) -> std::optional<std::pair<int, uint32_t>> {
    auto r = mu.mul(unit_of[x], unit_of[y]);
    if (!r) return std::nullopt;
    int32_t s = slot[r->second];
    if (s < 0) return std::nullopt;  // unreachable: support is closed
    return std::make_pair(1, (uint32_t)s);
  };
  fill_by_folding(b, sig, dim, mul, -2);
  return b.build("ut:" + std::to_string(k) + "," + std::to_string(l));
}

AlgebraPtr grassmann_envelope(const GradedAlgebra& A, uint32_t m, bool nonunital_words) {
  if (m < 1) throw std::invalid_argument("grassmann_envelope: need m >= 1");
  if (m > 20) throw std::invalid_argument("grassmann_envelope: rank too large");
  uint32_t words = 1u << m;

  // basis pairs (algebra index, mask), lexicographic
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t a = 0; a < A.dim(); ++a)
    for (uint32_t mask = nonunital_words ? 1 : 0; mask < words; ++mask)
      if (A.parity(a) == GrassmannWord(mask, m).parity()) pairs.emplace_back(a, mask);

  uint32_t dim = (uint32_t)pairs.size();
  std::vector<int32_t> slot(A.dim() * (uint64_t)words, -1);
  std::vector<uint8_t> parity(dim);
  std::vector<std::string> names(dim);
  for (uint32_t s = 0; s < dim; ++s) {
    auto [a, mask] = pairs[s];
    slot[(uint64_t)a * words + mask] = (int32_t)s;
    parity[s] = GrassmannWord(mask, m).parity();
    names[s] = A.basis_names()[a] + "@" + GrassmannWord(mask, m).str();
  }

  AlgebraBuilder b(dim, parity, A.signature());
  b.set_basis_names(names);
  const Signature& sig = A.signature();
  for (size_t op = 0; op < sig.size(); ++op) {
    uint32_t ar = sig.op(op).arity;
    if (ar == 0) {
      // constant c (x) 1; requires unital words and an even constant
      if (nonunital_words)
        throw std::invalid_argument("grassmann_envelope: arity-0 symbol needs the empty word");
      const SparseVec* c = A.tensor(op).find(0);
      if (c)
        for (const auto& [i, x] : *c) {
          int32_t s = slot[(uint64_t)i * words + 0];
          if (s < 0) throw std::invalid_argument("grassmann_envelope: odd arity-0 constant");
          b.add(op, {}, (uint32_t)s, x);
        }
      continue;
    }
    const OpTensor& t = A.tensor(op);
    std::vector<uint32_t> tuple(ar, 0);
    std::vector<uint32_t> aidx(ar);
    do {
      // decode envelope tuple, compute the word product once per tuple
      uint32_t acc_mask = 0;
      int sign = 1;
      bool zero = false;
      for (uint32_t p = 0; p < ar; ++p) {
        auto [a, mask] = pairs[tuple[p]];
        aidx[p] = a;
        if (acc_mask & mask) {
          zero = true;
          break;
        }
        sign = (merge_inversions(acc_mask, mask) & 1u) ? -sign : sign;
        acc_mask |= mask;
      }
      if (!zero) {
        uint64_t key = 0;
        for (uint32_t p = 0; p < ar; ++p) key = key * A.dim() + aidx[p];
        if (const SparseVec* out = t.find(key)) {
          for (const auto& [i, c] : *out) {
            int32_t s = slot[(uint64_t)i * words + acc_mask];
            if (s >= 0) b.add(op, tuple, (uint32_t)s, c * Rational(sign));
          }
        }
      }
    } while (next_tuple(tuple, dim));
  }
  std::string name = (nonunital_words ? "Gs" : "G") + std::to_string(m) + "(" + A.name() + ")";
  return b.build(name);
}

AlgebraPtr tensor_fz2(const GradedAlgebra& A, bool ignore_grading) {
  if (!ignore_grading)
    for (uint32_t i = 0; i < A.dim(); ++i)
      if (A.parity(i) != 0)
        throw std::invalid_argument("tensor_fz2: input must be trivially graded");

  uint32_t dim = 2 * A.dim();
  std::vector<uint8_t> parity(dim, 0);
  std::vector<std::string> names(dim);
  for (uint32_t i = 0; i < A.dim(); ++i) {
    parity[A.dim() + i] = 1;
    names[i] = A.basis_names()[i];
    names[A.dim() + i] = "eps*" + A.basis_names()[i];
  }

  const Signature& sig = A.signature();
  AlgebraBuilder b(dim, parity, sig);
  b.set_basis_names(names);
  for (size_t op = 0; op < sig.size(); ++op) {
    uint32_t ar = sig.op(op).arity;
    const OpTensor& t = A.tensor(op);
    for (size_t s = 0; s < t.keys.size(); ++s) {
      std::vector<uint32_t> in(ar);
      uint64_t k = t.keys[s];
      for (uint32_t p = ar; p-- > 0;) {
        in[p] = (uint32_t)(k % A.dim());
        k /= A.dim();
      }
      // all eps patterns
      for (uint32_t pat = 0; pat < (1u << ar); ++pat) {
        std::vector<uint32_t> shifted(ar);
        uint32_t total = 0;
        for (uint32_t p = 0; p < ar; ++p) {
          uint32_t e = (pat >> p) & 1u;
          total ^= e;
          shifted[p] = in[p] + e * A.dim();
        }
        for (const auto& [i, c] : t.values[s]) b.add(op, shifted, i + total * A.dim(), c);
      }
    }
  }
  return b.build("fz2(" + A.name() + ")");
}

AlgebraPtr make_sl2(Signature sig) {
  // basis order: h, e, f
  AlgebraBuilder b(3, {0, 0, 0}, sig);
  b.set_basis_names({"h", "e", "f"});
  size_t op = sig.fold_op();
  if (sig.op(op).arity != 2)
    throw std::invalid_argument("make_sl2: signature needs a binary operation");
  if (sig.size() != 1)
    throw std::invalid_argument("make_sl2: single binary operation expected");
  auto add = [&](uint32_t x, uint32_t y, uint32_t out, long c) {
    std::array<uint32_t, 2> in{x, y};
    b.add(op, in, out, Rational(c));
  };
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h, antisymmetric
  add(0, 1, 1, 2);
  add(1, 0, 1, -2);
  add(0, 2, 2, -2);
  add(2, 0, 2, 2);
  add(1, 2, 0, 1);
  add(2, 1, 0, -1);
  return b.build("sl2");
}

}  // namespace grasp
