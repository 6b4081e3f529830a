#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ncequiv/eval.hpp"
#include "ncequiv/ideal.hpp"
#include "ncequiv/parse.hpp"
#include "ncequiv/pencil.hpp"

namespace ncequiv::cli {

using json = nlohmann::ordered_json;

// Exact entries are strings in the polynomial grammar ("1/2", "3 - 2*i").
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldPtr& field);

// {"size": k, "field": "...", "matrices": [...]}
json to_json(const MatrixTuple& x);
MatrixTuple tuple_from_json(const json& j);
// Matrices of any common shape; the field may be omitted.
std::vector<Matrix> matrices_from_json(const json& j);
FieldPtr field_of(const json& j);

json to_json(const LinearPencil& l);
LinearPencil pencil_from_json(const json& j);

json to_json(const RefutationWitness& w);
RefutationWitness witness_from_json(const json& j);

json to_json(const ComaxCertificate& c, const VarNames& vars);

// A file path, or inline JSON when the text opens with '{' or '['.
json load_json(const std::string& arg);

}  // namespace ncequiv::cli
