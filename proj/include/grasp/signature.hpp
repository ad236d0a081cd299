#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasp {

struct Operation {
  std::string id;
  uint32_t arity = 2;
  bool operator==(const Operation&) const = default;
};

/// A finite operation signature. At least one operation must have arity >= 2;
/// arity-0 symbols (unital constants) are allowed and flagged.
class Signature {
 public:
  Signature() : Signature({Operation{"w2", 2}}) {}

  explicit Signature(std::vector<Operation> ops) : ops_(std::move(ops)) {
    bool ok = false;
    for (const auto& op : ops_) {
      if (op.id.empty()) throw std::invalid_argument("Signature: empty op id");
      if (op.arity >= 2) ok = true;
      for (const auto& other : ops_)
        if (&other != &op && other.id == op.id)
          throw std::invalid_argument("Signature: duplicate op id '" + op.id + "'");
    }
    if (!ok) throw std::invalid_argument("Signature: needs an operation of arity >= 2");
  }

  static Signature binary() { return Signature(); }

  /// Parses a comma list of op specs: "w2,w3" (wN has arity N) or "name:arity".
  static Signature parse(const std::string& csv) {
    std::vector<Operation> ops;
    size_t start = 0;
    while (start <= csv.size()) {
      size_t comma = csv.find(',', start);
      std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!tok.empty()) {
        size_t colon = tok.find(':');
        if (colon != std::string::npos) {
          ops.push_back({tok.substr(0, colon), (uint32_t)std::stoul(tok.substr(colon + 1))});
        } else if (tok.size() > 1 && tok[0] == 'w' &&
                   tok.find_first_not_of("0123456789", 1) == std::string::npos) {
          ops.push_back({tok, (uint32_t)std::stoul(tok.substr(1))});
        } else {
          throw std::invalid_argument("Signature: bad op spec '" + tok + "'");
        }
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Signature(std::move(ops));
  }

  const std::vector<Operation>& ops() const { return ops_; }
  size_t size() const { return ops_.size(); }
  const Operation& op(size_t i) const { return ops_.at(i); }

  int find(const std::string& id) const {
    for (size_t i = 0; i < ops_.size(); ++i)
      if (ops_[i].id == id) return (int)i;
    return -1;
  }

  bool has_nullary() const {
    for (const auto& op : ops_)
      if (op.arity == 0) return true;
    return false;
  }

  bool has_arity_le1() const {
    for (const auto& op : ops_)
      if (op.arity <= 1) return true;
    return false;
  }

  /// Index of the operation used to fold plain words: the first op of minimal
  /// arity >= 2.
  size_t fold_op() const {
    size_t best = ops_.size();
    for (size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].arity < 2) continue;
      if (best == ops_.size() || ops_[i].arity < ops_[best].arity) best = i;
    }
    return best;
  }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Operation> ops_;
};

}  // namespace grasp
