#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grasp {

/// Raised when an operation would exceed the configured resource caps.
/// Explicit failure, never silent truncation.
class resource_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Knobs shared by the engine, the suite and the CLI.
struct RunConfig {
  uint32_t degree_cap = 8;             // largest multilinear degree accepted
  uint64_t term_eval_cap = 100000000;  // tuples x monomial terms per check
  uint64_t monomial_cap = 10000;       // largest P_n basis materialized
  uint32_t trials = 8;                 // Monte Carlo trials for simplicity
  uint64_t seed = 0;
  uint32_t parallel_width = 1;
  std::string output_path;

  void validate() const {
    if (term_eval_cap == 0 || monomial_cap == 0 || degree_cap == 0 || parallel_width == 0)
      throw std::invalid_argument("RunConfig: caps and width must be positive");
  }
};

}  // namespace grasp
