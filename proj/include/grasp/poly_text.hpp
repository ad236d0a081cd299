#pragma once

#include <string>

#include "grasp/omega.hpp"
#include "grasp/poly.hpp"

namespace grasp {

/// Canonical text form: terms joined by " + ", each "<coeff> * <body>" with
/// exact rational coefficients ("p" or "p/q", sign included). Word bodies
/// list variables as x3 x1 x2 (1-based); graded polynomials use y/z names.
/// Omega bodies are s-expressions like (w2 (w2 x1 x2) x3).
std::string to_text(const MultilinearPoly& f);
std::string to_text(const OmegaPoly& f);

/// Inverse of to_text; also accepts "-" separators and omitted unit
/// coefficients. Throws std::invalid_argument on malformed input.
MultilinearPoly parse_poly(const std::string& text);
OmegaPoly parse_omega_poly(const std::string& text, const Signature& sig);

std::string word_str(const Word& w, const std::vector<uint8_t>& parities);
std::string monomial_str(const OmegaMonomial& t, const Signature& sig,
                         const std::vector<uint8_t>& parities);

}  // namespace grasp
