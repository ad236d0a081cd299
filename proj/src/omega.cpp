#include "grasp/omega.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grasp/config.hpp"

namespace grasp {

Word omega_leaves(const OmegaMonomial& t) {
  Word w;
  for (int32_t tok : t.pre)
    if (tok >= 0) w.push_back((uint16_t)tok);
  return w;
}

namespace {

size_t validate_rec(const std::vector<int32_t>& pre, size_t pos, const Signature& sig,
                    uint32_t& leaves) {
  if (pos >= pre.size()) throw std::invalid_argument("OmegaMonomial: truncated tree");
  int32_t tok = pre[pos];
  if (tok >= 0) {
    ++leaves;
    return pos + 1;
  }
  size_t op = (size_t)~tok;
  if (op >= sig.size()) throw std::invalid_argument("OmegaMonomial: unknown operation");
  uint32_t ar = sig.op(op).arity;
  size_t p = pos + 1;
  for (uint32_t i = 0; i < ar; ++i) p = validate_rec(pre, p, sig, leaves);
  return p;
}

}  // namespace

uint32_t omega_validate(const OmegaMonomial& t, const Signature& sig) {
  uint32_t leaves = 0;
  size_t end = validate_rec(t.pre, 0, sig, leaves);
  if (end != t.pre.size()) throw std::invalid_argument("OmegaMonomial: trailing tokens");
  return leaves;
}

OmegaPoly::OmegaPoly(Signature sig, uint32_t degree, std::vector<uint8_t> parities)
    : sig_(std::move(sig)), degree_(degree), parities_(std::move(parities)) {
  if (parities_.empty()) parities_.assign(degree_, 0);
  if (parities_.size() != degree_)
    throw std::invalid_argument("OmegaPoly: parity vector size != degree");
}

bool OmegaPoly::graded() const {
  for (uint8_t p : parities_)
    if (p) return true;
  return false;
}

void OmegaPoly::add_term(OmegaMonomial t, const Rational& c) {
  omega_validate(t, sig_);
  Word leaves = omega_leaves(t);
  if (leaves.size() != degree_) throw std::invalid_argument("add_term: degree mismatch");
  std::vector<bool> seen(degree_, false);
  for (uint16_t v : leaves) {
    if (v >= degree_ || seen[v]) throw std::invalid_argument("add_term: not multilinear");
    seen[v] = true;
  }
  if (c.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(std::move(t), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OmegaPoly OmegaPoly::operator+(const OmegaPoly& o) const {
  if (!(sig_ == o.sig_) || degree_ != o.degree_ || parities_ != o.parities_)
    throw std::invalid_argument("OmegaPoly +: shape mismatch");
  OmegaPoly r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

OmegaPoly OmegaPoly::operator*(const Rational& c) const {
  OmegaPoly r(sig_, degree_, parities_);
  if (c.is_zero()) return r;
  for (const auto& [t, x] : terms_) r.terms_[t] = x * c;
  return r;
}

bool OmegaPoly::operator==(const OmegaPoly& o) const {
  return sig_ == o.sig_ && degree_ == o.degree_ && parities_ == o.parities_ &&
         terms_ == o.terms_;
}

namespace {

// Shapes with leaves labeled 0..n-1 in order; memoized per call.
void shapes_rec(const Signature& sig, uint32_t n, uint64_t cap,
                std::vector<std::vector<OmegaMonomial>>& memo) {
  if (memo.size() > n && !memo[n].empty()) return;
  if (memo.size() <= n) memo.resize(n + 1);
  if (!memo[n].empty()) return;
  if (n == 1) {
    memo[1] = {OmegaMonomial::leaf(0)};
    return;
  }
  std::vector<OmegaMonomial> out;
  for (size_t op = 0; op < sig.size(); ++op) {
    uint32_t a = sig.op(op).arity;
    if (a < 2 || a > n) continue;
    // compositions of n into a parts >= 1, lexicographic
    auto emit = [&](auto&& self, size_t i, uint32_t rest, std::vector<uint32_t>& acc) -> void {
      if (i + 1 == a) {
        acc.push_back(rest);
        // assemble children for this composition
        std::vector<std::vector<OmegaMonomial>> kids(a);
        for (size_t q = 0; q < a; ++q) {
          shapes_rec(sig, acc[q], cap, memo);
          kids[q] = memo[acc[q]];
        }
        std::vector<size_t> pick(a, 0);
        while (true) {
          std::vector<OmegaMonomial> ch;
          uint32_t off = 0;
          for (size_t q = 0; q < a; ++q) {
            OmegaMonomial c = kids[q][pick[q]];
            for (int32_t& tok : c.pre)
              if (tok >= 0) tok += off;
            off += acc[q];
            ch.push_back(std::move(c));
          }
          out.push_back(OmegaMonomial::node(op, ch));
          if (out.size() > cap)
            throw resource_cap_error("enumerate_omega: shape count exceeds cap");
          size_t q = a;
          while (q > 0) {
            if (++pick[q - 1] < kids[q - 1].size()) break;
            pick[q - 1] = 0;
            --q;
          }
          if (q == 0) break;
        }
        acc.pop_back();
        return;
      }
      for (uint32_t v = 1; v + (a - i - 1) <= rest; ++v) {
        acc.push_back(v);
        self(self, i + 1, rest - v, acc);
        acc.pop_back();
      }
    };
    std::vector<uint32_t> acc;
    emit(emit, 0, n, acc);
  }
  memo[n] = std::move(out);
}

}  // namespace

std::vector<OmegaMonomial> enumerate_omega_shapes(const Signature& sig, uint32_t n,
                                                  uint64_t cap) {
  if (n < 1) throw std::invalid_argument("enumerate_omega: n >= 1");
  if (sig.has_arity_le1())
    throw std::invalid_argument(
        "enumerate_omega: signatures with arity <= 1 operations span an infinite "
        "multilinear space");
  std::vector<std::vector<OmegaMonomial>> memo;
  shapes_rec(sig, n, cap, memo);
  return memo[n];
}

OmegaMonomial relabel_leaves(const OmegaMonomial& shape, std::span<const uint16_t> perm) {
  OmegaMonomial t = shape;
  for (int32_t& tok : t.pre)
    if (tok >= 0) tok = perm[tok];
  return t;
}

std::vector<OmegaMonomial> enumerate_omega_monomials(const Signature& sig, uint32_t n,
                                                     uint64_t cap) {
  std::vector<OmegaMonomial> shapes = enumerate_omega_shapes(sig, n, cap);
  uint64_t fact = 1;
  for (uint32_t i = 2; i <= n; ++i) fact *= i;
  if (shapes.size() > cap / std::max<uint64_t>(fact, 1))
    throw resource_cap_error("enumerate_omega: monomial count exceeds cap");

  std::vector<OmegaMonomial> out;
  out.reserve(shapes.size() * fact);
  for (const auto& sh : shapes) {
    std::vector<uint16_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      out.push_back(relabel_leaves(sh, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

OmegaPoly star(const OmegaPoly& f) {
  OmegaPoly r(f.signature(), f.degree(), f.parities());
  for (const auto& [t, c] : f.terms()) {
    Word zs;
    for (uint16_t v : omega_leaves(t))
      if (f.parity(v)) zs.push_back(v);
    r.add_term(t, c * Rational(perm_sign(zs)));
  }
  return r;
}

OmegaMonomial left_normed_tree(const Signature& sig, const Word& w) {
  if (w.empty()) throw std::invalid_argument("left_normed_tree: empty word");
  if (w.size() == 1) return OmegaMonomial::leaf(w[0]);
  size_t op = sig.fold_op();
  uint32_t a = sig.op(op).arity;
  if (w.size() < a || (w.size() - a) % (a - 1) != 0)
    throw std::invalid_argument("left_normed_tree: length not expressible with arity " +
                                std::to_string(a));
  std::vector<OmegaMonomial> ch;
  for (uint32_t i = 0; i < a; ++i) ch.push_back(OmegaMonomial::leaf(w[i]));
  OmegaMonomial cur = OmegaMonomial::node(op, ch);
  size_t pos = a;
  while (pos < w.size()) {
    std::vector<OmegaMonomial> next{cur};
    for (uint32_t i = 0; i + 1 < a; ++i) next.push_back(OmegaMonomial::leaf(w[pos + i]));
    cur = OmegaMonomial::node(op, next);
    pos += a - 1;
  }
  return cur;
}

}  // namespace grasp
