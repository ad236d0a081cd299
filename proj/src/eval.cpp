#include "grasp/eval.hpp"

#include <stdexcept>

namespace grasp {

Evaluator::Evaluator(const GradedAlgebra& A) : A_(&A) {
  fold_op_ = A.signature().fold_op();
  fold_arity_ = A.signature().op(fold_op_).arity;
}

bool Evaluator::word_length_ok(size_t len) const {
  if (len == 1) return true;
  if (len < fold_arity_) return false;
  return (len - fold_arity_) % (fold_arity_ - 1) == 0;
}

void Evaluator::eval_word_fast(std::span<const uint16_t> word, std::span<const uint32_t> tuple,
                               FastElem& out) const {
  if (!A_->int64_ok()) throw fast_overflow{};
  out.clear();
  if (word.empty()) return;
  if (word.size() == 1) {
    out.set_basis(tuple[word[0]]);
    return;
  }
  if (!word_length_ok(word.size()))
    throw std::invalid_argument("eval_word: word length not expressible by the signature");
  const uint32_t d = A_->dim();
  const OpTensor& t = A_->tensor(fold_op_);
  const auto& fast = A_->fast_values(fold_op_);

  // first application: all slots are basis elements
  uint64_t key = 0;
  for (uint32_t p = 0; p < fold_arity_; ++p) key = key * d + tuple[word[p]];
  int32_t s = t.slot(key);
  if (s >= 0)
    for (const auto& [i, c] : fast[s]) out.add(i, c);

  FastElem next;
  size_t pos = fold_arity_;
  while (pos < word.size() && out.n > 0) {
    uint64_t suffix = 0;
    uint64_t radix = 1;
    for (uint32_t p = 0; p < fold_arity_ - 1; ++p) {
      suffix = suffix * d + tuple[word[pos + p]];
      radix *= d;
    }
    next.clear();
    for (int e = 0; e < out.n; ++e) {
      int32_t slot = t.slot((uint64_t)out.idx[e] * radix + suffix);
      if (slot < 0) continue;
      for (const auto& [i, c] : fast[slot]) next.add(i, mul_ck(out.c[e], c));
    }
    out = next;
    pos += fold_arity_ - 1;
  }
}

namespace {

size_t tree_fast_rec(const GradedAlgebra& A, const std::vector<int32_t>& pre, size_t pos,
                     std::span<const uint32_t> tuple, FastElem& out) {
  int32_t tok = pre[pos];
  if (tok >= 0) {
    out.set_basis(tuple[tok]);
    return pos + 1;
  }
  size_t op = (size_t)~tok;
  uint32_t a = A.signature().op(op).arity;
  // children evaluated into a small stack
  std::vector<FastElem> kids(a);
  size_t p = pos + 1;
  for (uint32_t i = 0; i < a; ++i) p = tree_fast_rec(A, pre, p, tuple, kids[i]);

  out.clear();
  const OpTensor& t = A.tensor(op);
  const auto& fast = A.fast_values(op);
  const uint32_t d = A.dim();
  std::vector<int> pick(a, 0);
  bool any_empty = false;
  for (uint32_t i = 0; i < a; ++i) any_empty = any_empty || kids[i].n == 0;
  if (!any_empty) {
    while (true) {
      uint64_t key = 0;
      int64_t coef = 1;
      for (uint32_t i = 0; i < a; ++i) {
        key = key * d + kids[i].idx[pick[i]];
        coef = mul_ck(coef, kids[i].c[pick[i]]);
      }
      int32_t s = t.slot(key);
      if (s >= 0)
        for (const auto& [i, c] : fast[s]) out.add(i, mul_ck(coef, c));
      uint32_t q = a;
      while (q > 0) {
        if (++pick[q - 1] < kids[q - 1].n) break;
        pick[q - 1] = 0;
        --q;
      }
      if (q == 0) break;
    }
  }
  return p;
}

size_t tree_exact_rec(const GradedAlgebra& A, const std::vector<int32_t>& pre, size_t pos,
                      std::span<const SparseVec> args, SparseVec& out) {
  int32_t tok = pre[pos];
  if (tok >= 0) {
    out = args[tok];
    return pos + 1;
  }
  size_t op = (size_t)~tok;
  uint32_t a = A.signature().op(op).arity;
  std::vector<SparseVec> kids(a);
  size_t p = pos + 1;
  for (uint32_t i = 0; i < a; ++i) p = tree_exact_rec(A, pre, p, args, kids[i]);
  out = A.apply_sparse(op, kids);
  return p;
}

}  // namespace

void Evaluator::eval_tree_fast(const OmegaMonomial& t, std::span<const uint32_t> tuple,
                               FastElem& out) const {
  if (!A_->int64_ok()) throw fast_overflow{};
  tree_fast_rec(*A_, t.pre, 0, tuple, out);
}

SparseVec Evaluator::eval_word_exact(std::span<const uint16_t> word,
                                     std::span<const uint32_t> tuple) const {
  std::vector<SparseVec> args;
  args.reserve(tuple.size());
  for (uint32_t b : tuple) args.push_back(SparseVec{{b, Rational(1)}});
  SparseVec out;
  if (word.empty()) return out;
  if (word.size() == 1) return args[word[0]];
  if (!word_length_ok(word.size()))
    throw std::invalid_argument("eval_word: word length not expressible by the signature");
  std::vector<SparseVec> first;
  for (uint32_t p = 0; p < fold_arity_; ++p) first.push_back(args[word[p]]);
  out = A_->apply_sparse(fold_op_, first);
  size_t pos = fold_arity_;
  while (pos < word.size()) {
    std::vector<SparseVec> step{out};
    for (uint32_t p = 0; p + 1 < fold_arity_; ++p) step.push_back(args[word[pos + p]]);
    out = A_->apply_sparse(fold_op_, step);
    pos += fold_arity_ - 1;
  }
  return out;
}

SparseVec Evaluator::eval_tree_exact(const OmegaMonomial& t,
                                     std::span<const uint32_t> tuple) const {
  std::vector<SparseVec> args;
  uint32_t vars = 0;
  for (int32_t tok : t.pre) vars = std::max(vars, tok >= 0 ? (uint32_t)tok + 1 : vars);
  args.resize(std::max<size_t>(vars, tuple.size()));
  for (size_t i = 0; i < tuple.size(); ++i) args[i] = SparseVec{{tuple[i], Rational(1)}};
  SparseVec out;
  tree_exact_rec(*A_, t.pre, 0, args, out);
  return out;
}

namespace {

SparseVec eval_word_elements(const GradedAlgebra& A, std::span<const uint16_t> word,
                             std::span<const SparseVec> args) {
  Evaluator ev(A);
  size_t fold = A.signature().fold_op();
  uint32_t a = A.signature().op(fold).arity;
  if (word.size() == 1) return args[word[0]];
  if (!ev.word_length_ok(word.size()))
    throw std::invalid_argument("eval_word: word length not expressible by the signature");
  std::vector<SparseVec> first;
  for (uint32_t p = 0; p < a; ++p) first.push_back(args[word[p]]);
  SparseVec out = A.apply_sparse(fold, first);
  size_t pos = a;
  while (pos < word.size()) {
    std::vector<SparseVec> step{out};
    for (uint32_t p = 0; p + 1 < a; ++p) step.push_back(args[word[pos + p]]);
    out = A.apply_sparse(fold, step);
    pos += a - 1;
  }
  return out;
}

}  // namespace

SparseVec eval_poly_elements(const GradedAlgebra& A, const MultilinearPoly& f,
                             std::span<const SparseVec> args) {
  if (args.size() != f.degree()) throw std::invalid_argument("eval_poly: argument count");
  std::map<uint32_t, Rational> acc;
  for (const auto& [w, c] : f.terms()) sv_accumulate(acc, eval_word_elements(A, w, args), c);
  return sv_from_map(acc);
}

SparseVec eval_poly_elements(const GradedAlgebra& A, const OmegaPoly& f,
                             std::span<const SparseVec> args) {
  if (args.size() != f.degree()) throw std::invalid_argument("eval_poly: argument count");
  if (!(f.signature() == A.signature()))
    throw std::invalid_argument("eval_poly: signature mismatch");
  std::map<uint32_t, Rational> acc;
  for (const auto& [t, c] : f.terms()) {
    SparseVec v;
    tree_exact_rec(A, t.pre, 0, args, v);
    sv_accumulate(acc, v, c);
  }
  return sv_from_map(acc);
}

SparseVec eval_poly_basis_tuple(const GradedAlgebra& A, const MultilinearPoly& f,
                                std::span<const uint32_t> tuple) {
  std::vector<SparseVec> args;
  for (uint32_t b : tuple) args.push_back(SparseVec{{b, Rational(1)}});
  return eval_poly_elements(A, f, args);
}

SparseVec eval_poly_basis_tuple(const GradedAlgebra& A, const OmegaPoly& f,
                                std::span<const uint32_t> tuple) {
  std::vector<SparseVec> args;
  for (uint32_t b : tuple) args.push_back(SparseVec{{b, Rational(1)}});
  return eval_poly_elements(A, f, args);
}

}  // namespace grasp
