#pragma once

#include <string>

#include <json.hpp>

#include "grasp/algebra.hpp"

namespace grasp {

/// Serializes an algebra to the interchange document
///   {name, dim, parity: [0|1,...], signature: [{op, arity}],
///    tensors: {op: [[i1,...,in, j, num, den], ...]}}
/// Entries are listed in lexicographic (inputs, output) order, so the output
/// is canonical and ingest(emit(A)) round-trips bit-exactly.
nlohmann::json algebra_to_json(const GradedAlgebra& A);

AlgebraPtr algebra_from_json(const nlohmann::json& doc);

AlgebraPtr load_algebra_file(const std::string& path);
void save_algebra_file(const GradedAlgebra& A, const std::string& path);

}  // namespace grasp
