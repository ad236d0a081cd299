#include "grasp/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grasp {

int perm_sign(std::span<const uint16_t> seq) {
  int inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

MultilinearPoly::MultilinearPoly(uint32_t degree, std::vector<uint8_t> parities)
    : degree_(degree), parities_(std::move(parities)) {
  if (parities_.empty()) parities_.assign(degree_, 0);
  if (parities_.size() != degree_)
    throw std::invalid_argument("MultilinearPoly: parity vector size != degree");
}

bool MultilinearPoly::graded() const {
  for (uint8_t p : parities_)
    if (p) return true;
  return false;
}

void MultilinearPoly::add_term(Word w, const Rational& c) {
  if (w.size() != degree_) throw std::invalid_argument("add_term: word length != degree");
  std::vector<bool> seen(degree_, false);
  for (uint16_t v : w) {
    if (v >= degree_ || seen[v])
      throw std::invalid_argument("add_term: word is not multilinear");
    seen[v] = true;
  }
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultilinearPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& o) const {
  if (degree_ != o.degree_ || parities_ != o.parities_)
    throw std::invalid_argument("poly +: shape mismatch");
  MultilinearPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& o) const {
  return *this + o * Rational(-1);
}

MultilinearPoly MultilinearPoly::operator*(const Rational& c) const {
  MultilinearPoly r(degree_, parities_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_[w] = x * c;
  return r;
}

bool MultilinearPoly::operator==(const MultilinearPoly& o) const {
  return degree_ == o.degree_ && parities_ == o.parities_ && terms_ == o.terms_;
}

std::vector<Word> all_words(uint32_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

MultilinearPoly standard_poly(uint32_t n) {
  if (n < 1) throw std::invalid_argument("standard_poly: n >= 1");
  MultilinearPoly f(n);
  for (const Word& w : all_words(n)) f.add_term(w, Rational(perm_sign(w)));
  return f;
}

MultilinearPoly capelli_poly(uint32_t n) {
  if (n < 1) throw std::invalid_argument("capelli_poly: n >= 1");
  MultilinearPoly f(2 * n - 1);
  Word sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Word w;
    w.reserve(2 * n - 1);
    for (uint32_t i = 0; i < n; ++i) {
      w.push_back(sigma[i]);
      if (i + 1 < n) w.push_back((uint16_t)(n + i));
    }
    f.add_term(std::move(w), Rational(perm_sign(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return f;
}

MultilinearPoly commutator_poly(uint32_t k) {
  if (k < 1) throw std::invalid_argument("commutator_poly: k >= 1");
  MultilinearPoly f(k);
  if (k == 1) {
    f.add_term({0}, Rational(1));
    return f;
  }
  // [x1,x2] then left-normed extension [[...],x_{j+1}]
  std::map<Word, Rational> cur{{Word{0, 1}, Rational(1)}, {Word{1, 0}, Rational(-1)}};
  for (uint16_t j = 2; j < k; ++j) {
    std::map<Word, Rational> next;
    for (const auto& [w, c] : cur) {
      Word left = w;
      left.push_back(j);
      next[left] += c;
      Word right;
      right.push_back(j);
      right.insert(right.end(), w.begin(), w.end());
      next[right] -= c;
    }
    cur = std::move(next);
  }
  for (const auto& [w, c] : cur) f.add_term(w, c);
  return f;
}

MultilinearPoly poly_product(const MultilinearPoly& f, const MultilinearPoly& g) {
  std::vector<uint8_t> par = f.parities();
  par.insert(par.end(), g.parities().begin(), g.parities().end());
  MultilinearPoly r(f.degree() + g.degree(), std::move(par));
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) {
      Word w = wf;
      for (uint16_t v : wg) w.push_back((uint16_t)(v + f.degree()));
      r.add_term(std::move(w), cf * cg);
    }
  return r;
}

MultilinearPoly poly_power(const MultilinearPoly& f, uint32_t k) {
  if (k < 1) throw std::invalid_argument("poly_power: k >= 1");
  MultilinearPoly r = f;
  for (uint32_t i = 1; i < k; ++i) r = poly_product(r, f);
  return r;
}

MultilinearPoly relabel(const MultilinearPoly& f, std::span<const uint16_t> perm) {
  if (perm.size() != f.degree()) throw std::invalid_argument("relabel: permutation size");
  std::vector<uint8_t> par(f.degree());
  for (uint16_t i = 0; i < f.degree(); ++i) par[perm[i]] = f.parity(i);
  MultilinearPoly r(f.degree(), std::move(par));
  for (const auto& [w, c] : f.terms()) {
    Word nw(w.size());
    for (size_t p = 0; p < w.size(); ++p) nw[p] = perm[w[p]];
    r.add_term(std::move(nw), c);
  }
  return r;
}

MultilinearPoly substitute(const MultilinearPoly& f, const std::vector<Word>& images,
                           uint32_t new_degree) {
  if (f.graded()) throw std::invalid_argument("substitute: graded input not supported");
  if (images.size() != f.degree()) throw std::invalid_argument("substitute: one image per variable");
  std::vector<bool> used(new_degree, false);
  for (const Word& im : images) {
    if (im.empty()) throw std::invalid_argument("substitute: empty image");
    for (uint16_t v : im) {
      if (v >= new_degree || used[v])
        throw std::invalid_argument("substitute: images collide or exceed the new degree");
      used[v] = true;
    }
  }
  for (bool u : used)
    if (!u) throw std::invalid_argument("substitute: images do not cover the new variables");

  MultilinearPoly r(new_degree);
  for (const auto& [w, c] : f.terms()) {
    Word nw;
    nw.reserve(new_degree);
    for (uint16_t v : w) nw.insert(nw.end(), images[v].begin(), images[v].end());
    r.add_term(std::move(nw), c);
  }
  return r;
}

MultilinearPoly with_parities(const MultilinearPoly& f, std::vector<uint8_t> parities) {
  MultilinearPoly r(f.degree(), std::move(parities));
  for (const auto& [w, c] : f.terms()) r.add_term(w, c);
  return r;
}

MultilinearPoly star(const MultilinearPoly& f) {
  MultilinearPoly r(f.degree(), f.parities());
  for (const auto& [w, c] : f.terms()) {
    Word zs;
    for (uint16_t v : w)
      if (f.parity(v)) zs.push_back(v);
    r.add_term(w, c * Rational(perm_sign(zs)));
  }
  return r;
}

MultilinearPoly swap_vars(const MultilinearPoly& f, uint16_t a, uint16_t b) {
  std::vector<uint16_t> perm(f.degree());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[a], perm[b]);
  return relabel(f, perm);
}

}  // namespace grasp
