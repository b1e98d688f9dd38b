#pragma once

#include <string>

#include "json.hpp"

#include "flagschur/flag_oracle.hpp"
#include "flagschur/laurent.hpp"
#include "flagschur/matrix.hpp"
#include "flagschur/schur.hpp"
#include "flagschur/stabilization.hpp"

namespace flagschur::json_io {

using Json = nlohmann::ordered_json;

// Writers produce a fixed key order; readers throw ParseError on malformed input.

Json to_json(const Rational& c);
Json to_json(const LaurentPoly& p);
Json to_json(const BiPoly& g);
Json to_json(const Matrix& m);
Json to_json(const WeightVec& w);
Json to_json(const SchurElement& x);
Json to_json(const StableProduct& sp);
Json to_json(const UElement& u);
Json specialized_to_json(const std::vector<std::pair<Matrix, LaurentPoly>>& terms);

LaurentPoly laurent_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
WeightVec weight_from_json(const Json& j);
SchurElement schur_from_json(const Json& j);
StableQuery query_from_json(const Json& j);
/// Accepts a symbol array or {"n": n, "symbols": [...]}.
UElement uelement_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse(const std::string& text);

}  // namespace flagschur::json_io
