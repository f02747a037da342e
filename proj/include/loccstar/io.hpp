#pragma once

// JSON schemas for algebras, elements, vectors and operators, plus a
// serializer that prints doubles with 17 significant digits so every value
// round-trips exactly. Schema violations raise InvalidSpec.

#include <json.hpp>
#include <string>

#include "loccstar/operator_algebra.hpp"

namespace loccstar {

using Json = nlohmann::json;

// Matrices are arrays of rows; each entry is [re, im].
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json algebra_to_json(const LocalAlgebra& a);
LocalAlgebra algebra_from_json(const Json& j);

Json element_to_json(const LocalElement& e);
LocalElement element_from_json(const Json& j, const LocalAlgebra& a);

Json module_to_json(const HilbertModule& m);
HilbertModule module_from_json(const Json& j, const LocalAlgebra& a);

Json vector_to_json(const ModuleVector& x);
ModuleVector vector_from_json(const Json& j, const LocalAlgebra& a);

Json operator_to_json(const ModuleOperator& t);
ModuleOperator operator_from_json(const Json& j, const LocalAlgebra& a);

// Parse an --index argument against the algebra's model.
FiberIndex index_from_string(const std::string& s, const LocalAlgebra& a);

// Compact deterministic dump: object keys sorted (nlohmann default),
// doubles formatted "%.17g".
std::string dump_json(const Json& j);

}  // namespace loccstar
