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

#include <vector>

#include "cubix/matrix.hpp"
#include "cubix/polynomial.hpp"

namespace cubix {

/// n quadratic forms in n variables.
class QuadraticMap {
public:
    QuadraticMap() = default;
    /// Validates arity and that every form is homogeneous of degree 2.
    explicit QuadraticMap(std::vector<Polynomial> forms);

    std::size_t n() const { return forms_.size(); }
    const std::vector<Polynomial>& forms() const { return forms_; }
    const Polynomial& operator[](std::size_t i) const { return forms_[i]; }

    Vector apply(const Vector& x) const;
    /// F(x + y) - F(x) - F(y): symmetric bilinear, equals dF_x(y).
    Vector polar(const Vector& x, const Vector& y) const;

    /// rows = forms, columns = quadratic monomials (lexicographically descending).
    Matrix coefficient_matrix() const;
    bool forms_independent() const;

    /// L1 o F o L2 as a new quadratic map.
    QuadraticMap transformed(const Matrix& left, const Matrix& right) const;
    /// F o L.
    QuadraticMap precompose(const Matrix& right) const;

    QuadraticMap scaled(const Rational& s) const;

    bool operator==(const QuadraticMap& o) const { return forms_ == o.forms_; }

private:
    std::vector<Polynomial> forms_;
};

/// The linear forms (rows of m) as polynomials: used to substitute x -> m x.
std::vector<Polynomial> linear_substitution(const Matrix& m);

}  // namespace cubix
