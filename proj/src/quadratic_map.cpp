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

#include "cubix/quadratic_map.hpp"

#include "cubix/error.hpp"
#include "cubix/sampling.hpp"

namespace cubix {

QuadraticMap::QuadraticMap(std::vector<Polynomial> forms) : forms_(std::move(forms)) {
    for (auto& f : forms_) {
        if (f.is_zero() && f.nvars() == 0) f = Polynomial(forms_.size());
        require_dim(f.nvars(), forms_.size(), "quadratic map arity");
        if (!f.is_homogeneous(2)) fail(Errc::DimensionMismatch, "form is not homogeneous quadratic: " + f.to_string());
    }
}

Vector QuadraticMap::apply(const Vector& x) const {
    require_dim(x.size(), n(), "quadratic map argument");
    Vector y(n());
    for (std::size_t i = 0; i < n(); ++i) y[i] = forms_[i].eval(x);
    return y;
}

Vector QuadraticMap::polar(const Vector& x, const Vector& y) const {
    return apply(x + y) - apply(x) - apply(y);
}

Matrix QuadraticMap::coefficient_matrix() const {
    auto basis = homogeneous_monomials(n(), 2);
    Matrix m(n(), basis.size());
    for (std::size_t i = 0; i < n(); ++i) m.set_row(i, coefficients(forms_[i], basis));
    return m;
}

bool QuadraticMap::forms_independent() const { return rank(coefficient_matrix()) == n(); }

std::vector<Polynomial> linear_substitution(const Matrix& m) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(Polynomial::linear(m.row(i)));
    return out;
}

QuadraticMap QuadraticMap::precompose(const Matrix& right) const {
    require_dim(right.rows(), n(), "precompose matrix");
    auto sub = linear_substitution(right);
    std::vector<Polynomial> out;
    for (const auto& f : forms_) out.push_back(f.substitute(sub));
    return QuadraticMap(std::move(out));
}

QuadraticMap QuadraticMap::transformed(const Matrix& left, const Matrix& right) const {
    require_dim(left.cols(), n(), "postcompose matrix");
    QuadraticMap inner = precompose(right);
    std::vector<Polynomial> out(left.rows(), Polynomial(n()));
    for (std::size_t i = 0; i < left.rows(); ++i)
        for (std::size_t j = 0; j < n(); ++j)
            if (sgn(left(i, j)) != 0) out[i] += left(i, j) * inner.forms_[j];
    return QuadraticMap(std::move(out));
}

QuadraticMap QuadraticMap::scaled(const Rational& s) const {
    std::vector<Polynomial> out;
    for (const auto& f : forms_) out.push_back(s * f);
    return QuadraticMap(std::move(out));
}

}  // namespace cubix
