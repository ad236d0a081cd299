#include "grasp/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grasp {

SparseVec sv_from_map(const std::map<uint32_t, Rational>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [i, c] : m)
    if (!c.is_zero()) v.emplace_back(i, c);
  return v;
}

void sv_accumulate(std::map<uint32_t, Rational>& acc, const SparseVec& v, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) acc[i] += c * x;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
  std::map<uint32_t, Rational> acc;
  sv_accumulate(acc, a, Rational(1));
  sv_accumulate(acc, b, Rational(1));
  return sv_from_map(acc);
}

SparseVec sv_scale(const SparseVec& a, const Rational& c) {
  if (c.is_zero()) return {};
  SparseVec v = a;
  for (auto& [i, x] : v) x *= c;
  return v;
}

bool sv_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  return true;
}

std::string sv_str(const SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + (i < names.size() ? names[i] : "b" + std::to_string(i));
  }
  return s;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (owner != o.owner) throw std::invalid_argument("AlgebraElement: mixed owners");
  return {owner, sv_add(coords, o.coords)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  if (owner != o.owner) throw std::invalid_argument("AlgebraElement: mixed owners");
  return {owner, sv_add(coords, sv_scale(o.coords, Rational(-1)))};
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
  return {owner, sv_scale(coords, c)};
}

AlgebraElement GradedAlgebra::basis_element(uint32_t i) const {
  if (i >= dim_) throw std::invalid_argument("basis_element: index out of range");
  return {this, {{i, Rational(1)}}};
}

AlgebraElement GradedAlgebra::element(SparseVec v) const {
  for (const auto& [i, c] : v) {
    if (i >= dim_) throw std::invalid_argument("element: index out of range");
    if (c.is_zero()) throw std::invalid_argument("element: zero coefficient entry");
  }
  return {this, std::move(v)};
}

AlgebraElement GradedAlgebra::apply(size_t op, std::span<const AlgebraElement> args) const {
  std::vector<SparseVec> vs;
  vs.reserve(args.size());
  for (const auto& a : args) {
    if (a.owner != this) throw std::invalid_argument("apply: foreign element");
    vs.push_back(a.coords);
  }
  return {this, apply_sparse(op, vs)};
}

SparseVec GradedAlgebra::apply_sparse(size_t op, std::span<const SparseVec> args) const {
  if (op >= sig_.size()) throw std::invalid_argument("apply: unknown operation");
  const OpTensor& t = tensors_[op];
  if (args.size() != t.arity) throw std::invalid_argument("apply: arity mismatch");

  std::map<uint32_t, Rational> acc;
  std::vector<uint32_t> idx(t.arity);
  // multilinear expansion over the sparse supports
  auto rec = [&](auto&& self, size_t pos, uint64_t key, const Rational& coef) -> void {
    if (pos == args.size()) {
      if (const SparseVec* out = t.find(key)) sv_accumulate(acc, *out, coef);
      return;
    }
    for (const auto& [i, c] : args[pos]) self(self, pos + 1, key * dim_ + i, coef * c);
  };
  rec(rec, 0, 0, Rational(1));
  return sv_from_map(acc);
}

bool GradedAlgebra::is_associative() const {
  size_t op = sig_.fold_op();
  if (sig_.op(op).arity != 2) return false;
  for (uint32_t a = 0; a < dim_; ++a)
    for (uint32_t b = 0; b < dim_; ++b) {
      const SparseVec* vab = tensors_[op].find((uint64_t)a * dim_ + b);
      for (uint32_t c = 0; c < dim_; ++c) {
        SparseVec left, right;
        if (vab) {
          std::array<SparseVec, 2> in{*vab, SparseVec{{c, Rational(1)}}};
          left = apply_sparse(op, in);
        }
        if (const SparseVec* vbc = tensors_[op].find((uint64_t)b * dim_ + c)) {
          std::array<SparseVec, 2> in{SparseVec{{a, Rational(1)}}, *vbc};
          right = apply_sparse(op, in);
        }
        if (!sv_equal(left, right)) return false;
      }
    }
  return true;
}

bool GradedAlgebra::same_structure(const GradedAlgebra& o) const {
  if (dim_ != o.dim_ || parity_ != o.parity_ || !(sig_ == o.sig_)) return false;
  for (size_t op = 0; op < sig_.size(); ++op) {
    if (tensors_[op].keys != o.tensors_[op].keys) return false;
    for (size_t s = 0; s < tensors_[op].keys.size(); ++s)
      if (!sv_equal(tensors_[op].values[s], o.tensors_[op].values[s])) return false;
  }
  return true;
}

AlgebraBuilder::AlgebraBuilder(uint32_t dim, std::vector<uint8_t> parity, Signature sig)
    : dim_(dim), parity_(std::move(parity)), sig_(std::move(sig)) {
  if (parity_.size() != dim) throw std::invalid_argument("AlgebraBuilder: parity size != dim");
  for (uint8_t p : parity_)
    if (p > 1) throw std::invalid_argument("AlgebraBuilder: parity must be 0 or 1");
  entries_.resize(sig_.size());
  // packed keys must fit in 64 bits
  for (const auto& op : sig_.ops()) {
    long double span = std::pow((long double)std::max<uint32_t>(dim, 1), (long double)op.arity);
    if (span > 9.0e18L)
      throw std::invalid_argument("AlgebraBuilder: dim^arity too large to index");
  }
}

void AlgebraBuilder::add(size_t op, std::span<const uint32_t> in, uint32_t out,
                         const Rational& c) {
  if (op >= sig_.size()) throw std::invalid_argument("AlgebraBuilder: unknown op");
  if (in.size() != sig_.op(op).arity) throw std::invalid_argument("AlgebraBuilder: arity mismatch");
  if (out >= dim_) throw std::invalid_argument("AlgebraBuilder: output index out of range");
  if (c.is_zero()) return;
  uint64_t key = 0;
  for (uint32_t i : in) {
    if (i >= dim_) throw std::invalid_argument("AlgebraBuilder: input index out of range");
    key = key * dim_ + i;
  }
  entries_[op][key][out] += c;
}

void AlgebraBuilder::set_basis_names(std::vector<std::string> names) {
  if (names.size() != dim_) throw std::invalid_argument("AlgebraBuilder: names size != dim");
  names_ = std::move(names);
}

std::shared_ptr<const GradedAlgebra> AlgebraBuilder::build(std::string name) {
  auto A = std::make_shared<GradedAlgebra>();
  GradedAlgebra& a = *A;
  a.name_ = std::move(name);
  a.dim_ = dim_;
  a.parity_ = parity_;
  a.sig_ = sig_;
  if (names_.empty()) {
    for (uint32_t i = 0; i < dim_; ++i) a.names_.push_back("b" + std::to_string(i));
  } else {
    a.names_ = names_;
  }
  for (uint32_t i = 0; i < dim_; ++i) a.by_parity_[parity_[i]].push_back(i);

  a.int64_ok_ = true;
  a.tensors_.resize(sig_.size());
  a.fast_.resize(sig_.size());
  for (size_t op = 0; op < sig_.size(); ++op) {
    OpTensor& t = a.tensors_[op];
    t.arity = sig_.op(op).arity;
    for (const auto& [key, outmap] : entries_[op]) {
      SparseVec v = sv_from_map(outmap);
      if (v.empty()) continue;
      // grading closure: parity of every output term == sum of input parities
      uint32_t psum = 0;
      uint64_t k = key;
      for (uint32_t slot = 0; slot < t.arity; ++slot) {
        psum += parity_[k % dim_];
        k /= dim_;
      }
      for (const auto& [out, c] : v) {
        (void)c;
        if (parity_[out] != (psum & 1u))
          throw std::invalid_argument("AlgebraBuilder: tensor entry violates the grading");
      }
      t.keys.push_back(key);
      t.values.push_back(std::move(v));
    }
    // dense index when affordable
    uint64_t span = 1;
    bool small = true;
    for (uint32_t i = 0; i < t.arity && small; ++i) {
      span *= std::max<uint32_t>(dim_, 1);
      if (span > (1u << 22)) small = false;
    }
    if (small && dim_ > 0) {
      t.dense.assign(span, -1);
      for (size_t s = 0; s < t.keys.size(); ++s) t.dense[t.keys[s]] = (int32_t)s;
    }
    // int64 twin for the fast kernels
    auto& fv = a.fast_[op];
    fv.resize(t.values.size());
    for (size_t s = 0; s < t.values.size(); ++s) {
      for (const auto& [i, c] : t.values[s]) {
        if (!c.is_integer() || !c.fits_int64() || std::abs(c.num_int64()) > (1ll << 40)) {
          a.int64_ok_ = false;
          break;
        }
        fv[s].emplace_back(i, c.num_int64());
      }
      if (!a.int64_ok_) break;
    }
    if (!a.int64_ok_) a.fast_.assign(sig_.size(), {});
  }
  return A;
}

}  // namespace grasp
