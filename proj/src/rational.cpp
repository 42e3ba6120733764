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

#include "cubix/rational.hpp"

#include "cubix/error.hpp"

namespace cubix {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::Underdetermined: return "Underdetermined";
        case Errc::Inconsistent: return "Inconsistent";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NotRankThree: return "NotRankThree";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::UnknownName: return "UnknownName";
        case Errc::NonTerminating: return "NonTerminating";
        case Errc::NotBirational22: return "NotBirational22";
        case Errc::Fake: return "Fake";
        case Errc::NoSolution: return "NoSolution";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NotInStructureGroup: return "NotInStructureGroup";
        case Errc::NotInvertibleBase: return "NotInvertibleBase";
        case Errc::NormalizationFailed: return "NormalizationFailed";
        case Errc::QuotientIllDefined: return "QuotientIllDefined";
        case Errc::DegeneratePolar: return "DegeneratePolar";
        case Errc::NonGenericTriple: return "NonGenericTriple";
        case Errc::InsideCenter: return "InsideCenter";
        case Errc::ParseError: return "ParseError";
        case Errc::IdentityFailure: return "IdentityFailure";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { fail(Errc::ParseError, "not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10);
    Integer d(den, 10);
    if (d == 0) bad();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zeros(n);
    v.at(i) = 1;
    return v;
}

Vector operator+(const Vector& a, const Vector& b) {
    require_dim(b.size(), a.size(), "vector add");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_dim(b.size(), a.size(), "vector sub");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const Vector& a, const Vector& b) {
    require_dim(b.size(), a.size(), "dot");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
    }
    return acc;
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace cubix
