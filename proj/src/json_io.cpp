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

#include "cubix/json_io.hpp"

#include "cubix/error.hpp"

namespace cubix {

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) fail(Errc::ParseError, what);
}

const Json& field(const Json& j, const char* key) {
    expect(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    expect(j.is_string(), "expected a rational as \"p/q\"");
    return parse_rational(j.get<std::string>());
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Vector vector_from_json(const Json& j) {
    expect(j.is_array(), "expected an array of rationals");
    Vector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const Json& j) {
    expect(j.is_array() && !j.empty(), "expected a nonempty array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    for (const auto& r : rows) expect(r.size() == rows[0].size(), "ragged matrix");
    return Matrix::from_rows(rows, rows[0].size());
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
    return out;
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars) {
    const Json* terms = &j;
    if (j.is_object()) {
        nvars = field(j, "nvars").get<std::size_t>();
        terms = &field(j, "terms");
    }
    expect(terms->is_array(), "expected a list of terms");
    std::vector<std::pair<Exponent, Rational>> parsed;
    for (const auto& t : *terms) {
        const Json& e = field(t, "exponents");
        expect(e.is_array(), "exponents must be an array");
        Exponent exps;
        for (const auto& k : e) {
            expect(k.is_number_unsigned(), "exponents must be nonnegative integers");
            exps.push_back(static_cast<std::uint16_t>(k.get<unsigned>()));
        }
        if (nvars == 0) nvars = exps.size();
        expect(exps.size() == nvars, "exponent vectors of different lengths");
        parsed.emplace_back(std::move(exps), rational_from_json(field(t, "coeff")));
    }
    Polynomial p(nvars);
    for (const auto& [e, c] : parsed) p.add_term(e, c);
    return p;
}

Json to_json(const Algebra& a) {
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a.table(i, j)));
        table.push_back(std::move(row));
    }
    return Json{{"dim", a.dim()}, {"unit", to_json(a.unit())}, {"table", std::move(table)}};
}

Algebra algebra_from_json(const Json& j) {
    const Json& dim = field(j, "dim");
    expect(dim.is_number_unsigned() && dim.get<std::size_t>() > 0, "dim must be a positive integer");
    std::size_t n = dim.get<std::size_t>();
    Vector unit = vector_from_json(field(j, "unit"));
    expect(unit.size() == n, "unit has the wrong length");
    const Json& t = field(j, "table");
    expect(t.is_array() && t.size() == n, "table must have dim rows");
    std::vector<std::vector<Vector>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        expect(t[i].is_array() && t[i].size() == n, "table row of the wrong length");
        for (std::size_t k = 0; k < n; ++k) {
            table[i].push_back(vector_from_json(t[i][k]));
            expect(table[i][k].size() == n, "product vector of the wrong length");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k)
            expect(table[i][k] == table[k][i],
                   "asymmetric table at (" + std::to_string(i) + ", " + std::to_string(k) + ")");
    return Algebra(std::move(unit), table);
}

Json to_json(const QuadraticMap& f) {
    Json forms = Json::array();
    for (const auto& p : f.forms()) forms.push_back(to_json(p));
    return Json{{"n", f.n()}, {"forms", std::move(forms)}};
}

QuadraticMap quadratic_map_from_json(const Json& j) {
    const Json& nj = field(j, "n");
    expect(nj.is_number_unsigned() && nj.get<std::size_t>() > 0, "n must be a positive integer");
    std::size_t n = nj.get<std::size_t>();
    const Json& forms = field(j, "forms");
    expect(forms.is_array() && forms.size() == n, "expected n forms");
    std::vector<Polynomial> out;
    for (const auto& f : forms) out.push_back(polynomial_from_json(f, n));
    return QuadraticMap(std::move(out));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
}

}  // namespace cubix
