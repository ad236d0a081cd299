#include "grasp/poly_text.hpp"

#include <cctype>
#include <stdexcept>

namespace grasp {

namespace {

std::string var_name(uint16_t v, const std::vector<uint8_t>& parities, bool graded) {
  char label = !graded ? 'x' : (parities[v] ? 'z' : 'y');
  return std::string(1, label) + std::to_string(v + 1);
}

}  // namespace

std::string word_str(const Word& w, const std::vector<uint8_t>& parities) {
  bool graded = false;
  for (uint8_t p : parities) graded = graded || p;
  std::string s;
  for (uint16_t v : w) {
    if (!s.empty()) s += ' ';
    s += var_name(v, parities, graded);
  }
  return s;
}

std::string monomial_str(const OmegaMonomial& t, const Signature& sig,
                         const std::vector<uint8_t>& parities) {
  bool graded = false;
  for (uint8_t p : parities) graded = graded || p;
  std::string s;
  size_t pos = 0;
  auto rec = [&](auto&& self) -> void {
    int32_t tok = t.pre[pos++];
    if (tok >= 0) {
      s += var_name((uint16_t)tok, parities, graded);
      return;
    }
    size_t op = (size_t)~tok;
    s += '(';
    s += sig.op(op).id;
    for (uint32_t i = 0; i < sig.op(op).arity; ++i) {
      s += ' ';
      self(self);
    }
    s += ')';
  };
  rec(rec);
  return s;
}

std::string to_text(const MultilinearPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += c.str() + " * " + word_str(w, f.parities());
  }
  return s;
}

std::string to_text(const OmegaPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [t, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += c.str() + " * " + monomial_str(t, f.signature(), f.parities());
  }
  return s;
}

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("poly parse: unexpected end");
    return text[pos++];
  }
  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && !std::isspace((unsigned char)text[pos]) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != '*' && text[pos] != '+')
      ++pos;
    if (start == pos) throw std::invalid_argument("poly parse: expected a token");
    return std::string(text.substr(start, pos - start));
  }
};

struct VarRef {
  uint16_t index;  // 0-based
  uint8_t parity;
};

VarRef parse_var(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y' && tok[0] != 'z'))
    throw std::invalid_argument("poly parse: bad variable '" + tok + "'");
  for (size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit((unsigned char)tok[i]))
      throw std::invalid_argument("poly parse: bad variable '" + tok + "'");
  unsigned long idx = std::stoul(tok.substr(1));
  if (idx == 0 || idx > 65535) throw std::invalid_argument("poly parse: variable index range");
  return {(uint16_t)(idx - 1), (uint8_t)(tok[0] == 'z' ? 1 : 0)};
}

// Is this token the start of a coefficient (digit, sign, or slash form)?
bool looks_numeric(const std::string& tok) {
  size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  return i < tok.size() && std::isdigit((unsigned char)tok[i]);
}

struct TermSink {
  uint32_t max_var = 0;
  std::vector<int8_t> parity;  // -1 unknown
  void see(VarRef v) {
    if (v.index >= parity.size()) parity.resize(v.index + 1, -1);
    if (parity[v.index] >= 0 && parity[v.index] != v.parity)
      throw std::invalid_argument("poly parse: variable used with both y and z labels");
    parity[v.index] = (int8_t)v.parity;
    max_var = std::max<uint32_t>(max_var, v.index + 1);
  }
  std::vector<uint8_t> final_parities() const {
    std::vector<uint8_t> out(parity.size(), 0);
    for (size_t i = 0; i < parity.size(); ++i) {
      if (parity[i] < 0)
        throw std::invalid_argument("poly parse: variable " + std::to_string(i + 1) +
                                    " never appears");
      out[i] = (uint8_t)parity[i];
    }
    return out;
  }
};

}  // namespace

MultilinearPoly parse_poly(const std::string& text) {
  Lexer lx{text};
  if (!lx.eof() && lx.peek() == '0') {
    size_t save = lx.pos;
    if (lx.token() == "0" && lx.eof()) return MultilinearPoly(0);
    lx.pos = save;
  }
  std::vector<std::pair<Word, Rational>> raw;
  TermSink sink;
  Rational pending_sign(1);
  bool first = true;
  while (!lx.eof()) {
    if (!first || lx.peek() == '+' || lx.peek() == '-') {
      char c = lx.get();
      if (c == '+') {
        pending_sign = Rational(1);
      } else if (c == '-') {
        pending_sign = Rational(-1);
      } else {
        throw std::invalid_argument("poly parse: expected + or - between terms");
      }
    }
    first = false;
    Rational coeff = pending_sign;
    pending_sign = Rational(1);
    std::string tok = lx.token();
    if (looks_numeric(tok)) {
      coeff *= Rational::parse(tok);
      if (lx.peek() == '*') lx.get();
      tok = lx.token();
    }
    Word w;
    while (true) {
      VarRef v = parse_var(tok);
      sink.see(v);
      w.push_back(v.index);
      if (lx.eof() || lx.peek() == '+' || lx.peek() == '-') break;
      tok = lx.token();
    }
    raw.emplace_back(std::move(w), coeff);
  }
  if (raw.empty()) throw std::invalid_argument("poly parse: empty polynomial");
  MultilinearPoly f(sink.max_var, sink.final_parities());
  for (auto& [w, c] : raw) f.add_term(std::move(w), c);
  return f;
}

namespace {

OmegaMonomial parse_sexpr(Lexer& lx, const Signature& sig, TermSink& sink) {
  if (lx.peek() == '(') {
    lx.get();
    std::string opid = lx.token();
    int op = sig.find(opid);
    if (op < 0) throw std::invalid_argument("poly parse: unknown operation '" + opid + "'");
    std::vector<OmegaMonomial> ch;
    for (uint32_t i = 0; i < sig.op(op).arity; ++i) ch.push_back(parse_sexpr(lx, sig, sink));
    if (lx.get() != ')') throw std::invalid_argument("poly parse: expected ')'");
    return OmegaMonomial::node((size_t)op, ch);
  }
  VarRef v = parse_var(lx.token());
  sink.see(v);
  return OmegaMonomial::leaf(v.index);
}

}  // namespace

OmegaPoly parse_omega_poly(const std::string& text, const Signature& sig) {
  Lexer lx{text};
  if (!lx.eof() && lx.peek() == '0') {
    size_t save = lx.pos;
    if (lx.token() == "0" && lx.eof()) return OmegaPoly(sig, 0);
    lx.pos = save;
  }
  std::vector<std::pair<OmegaMonomial, Rational>> raw;
  TermSink sink;
  Rational pending_sign(1);
  bool first = true;
  while (!lx.eof()) {
    if (!first || lx.peek() == '+' || lx.peek() == '-') {
      char c = lx.get();
      if (c == '+') {
        pending_sign = Rational(1);
      } else if (c == '-') {
        pending_sign = Rational(-1);
      } else {
        throw std::invalid_argument("poly parse: expected + or - between terms");
      }
    }
    first = false;
    Rational coeff = pending_sign;
    pending_sign = Rational(1);
    if (lx.peek() != '(') {
      std::string tok = lx.token();
      if (looks_numeric(tok)) {
        coeff *= Rational::parse(tok);
        if (lx.peek() == '*') lx.get();
      } else {
        // bare variable term
        VarRef v = parse_var(tok);
        sink.see(v);
        raw.emplace_back(OmegaMonomial::leaf(v.index), coeff);
        continue;
      }
    }
    raw.emplace_back(parse_sexpr(lx, sig, sink), coeff);
  }
  if (raw.empty()) throw std::invalid_argument("poly parse: empty polynomial");
  OmegaPoly f(sig, sink.max_var, sink.final_parities());
  for (auto& [t, c] : raw) f.add_term(std::move(t), c);
  return f;
}

}  // namespace grasp
