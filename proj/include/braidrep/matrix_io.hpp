// Text and JSON serialization of matrices over Z[H].
//
// JSON schema: { "g", "n", "k", "basis": [labels], "entries": row-major
// array of arrays of term lists, term = {"coeff": decimal string,
// "mono": monomial string} }.

#pragma once

#include <string>

#include <json.hpp>

#include "braidrep/rep.hpp"

namespace braidrep {

nlohmann::json matrix_to_json(const RepMatrix& m, int g, int n, int k);

// Aligned bracketed rows using the monomial grammar.
std::string matrix_pretty(const RepMatrix& m);

std::string rational_matrix_pretty(const std::vector<std::vector<mpq_class>>& m);
nlohmann::json rational_matrix_to_json(const std::vector<std::vector<mpq_class>>& m);

}  // namespace braidrep
