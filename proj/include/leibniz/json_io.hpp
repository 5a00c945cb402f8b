#pragma once

#include <string>

#include "json.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz::io {

using nlohmann::json;

/// Rationals travel as strings "p/q"; bare JSON integers are accepted on input.
Rational rational_from_json(const json& j);

json laurent_to_json(const LaurentScalar& s);
/// Accepts {"exp": "coeff", ...} or a plain rational.
LaurentScalar laurent_from_json(const json& j);

json algebra_to_json(const Algebra& a);
/// Brackets are 1-based; omitted products are zero. Does not require the
/// Leibniz identity so that broken inputs can be diagnosed.
Algebra algebra_from_json(const json& j);

json cochain_to_json(const Cochain2& c);
Cochain2 cochain_from_json(const json& j);

json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> rational_matrix_from_json(const json& j);
Matrix<LaurentScalar> laurent_matrix_from_json(const json& j);

json report_to_json(const DegenerationReport& r);
json invariant_to_json(const InvariantValue& v);

/// Source and target may be algebra objects or catalog names.
DegenerationFixture fixture_from_json(const json& j);

json read_json_file(const std::string& path);

/// Catalog name or path to an algebra JSON file.
Algebra load_algebra(const std::string& spec);

}  // namespace leibniz::io
