/*
 * Copyright 2026 The Cubix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "json.hpp"

#include "cubix/algebra.hpp"
#include "cubix/polynomial.hpp"
#include "cubix/quadratic_map.hpp"

namespace cubix {

using Json = nlohmann::ordered_json;

/// All readers throw Error(ParseError) on malformed input.

Json to_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// [{"exponents": [...], "coeff": "p/q"}, ...]
Json to_json(const Polynomial& p);
/// A term list, or {"nvars": n, "terms": [...]}. With a bare list the
/// variable count comes from the exponents, or from `nvars` when given.
Polynomial polynomial_from_json(const Json& j, std::size_t nvars = 0);

/// {"dim": n, "unit": [...], "table": [[[...]]]}; asymmetric tables are rejected.
Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

/// {"n": n, "forms": [polynomial, ...]}
Json to_json(const QuadraticMap& f);
QuadraticMap quadratic_map_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace cubix
