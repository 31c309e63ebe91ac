#pragma once

// JSON interchange. Scalars are strings ("3/4", "2", "1/2+3*w"); objects
// use nlohmann::json, whose default object type keeps keys sorted.

#include <nlohmann/json.hpp>

#include "kac/gradings.hpp"
#include "kac/morphisms.hpp"
#include "kac/superalgebra.hpp"

namespace kac {

using json = nlohmann::json;

json to_json(const Scalar& s);
json to_json(std::span<const Scalar> v);
json to_json(const Matrix& m);  // list of rows
json to_json(const SuperAlgebra& a);
json to_json(const LinearMap& m);
json to_json(const AbelianGroup& g);
json to_json(const GroupElement& g);
json to_json(const Grading& g);
json to_json(const GradingLabel& l);
json to_json(const Check& c);

ScalarDomain domain_from_json(const json& j);  // {"domain": descriptor}
Scalar scalar_from_json(const ScalarDomain& dom, const json& j);
Vector vector_from_json(const ScalarDomain& dom, const json& j);
Matrix matrix_from_json(const ScalarDomain& dom, const json& j);
SuperAlgebra algebra_from_json(const json& j);
// {"matrix": [[...]], "parity": "even"|"odd"} or a bare list of rows.
LinearMap map_from_json(const json& j, const SuperAlgebra& source, const SuperAlgebra& target);
AbelianGroup group_from_json(const json& j);
GroupElement element_from_json(const AbelianGroup& g, const json& j);
Grading grading_from_json(const json& j, const SuperAlgebra& a);

}  // namespace kac
