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

#include "cubix/composition.hpp"

#include "cubix/error.hpp"

namespace cubix {

CompositionAlgebra::CompositionAlgebra(std::string name, Vector unit, std::vector<std::vector<Vector>> table,
                                       Matrix conjugation, Polynomial norm_form)
    : name_(std::move(name)),
      unit_(std::move(unit)),
      table_(std::move(table)),
      conj_(std::move(conjugation)),
      norm_(std::move(norm_form)),
      norm_matrix_(unit_.size(), unit_.size()) {
    std::size_t n = unit_.size();
    require_dim(norm_.nvars(), n, "composition norm arity");
    for (const auto& [e, c] : norm_.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx.size() != 2) fail(Errc::DimensionMismatch, "composition norm must be quadratic");
        if (idx[0] == idx[1]) {
            norm_matrix_(idx[0], idx[0]) += c;
        } else {
            norm_matrix_(idx[0], idx[1]) += c / 2;
            norm_matrix_(idx[1], idx[0]) += c / 2;
        }
    }
}

Vector CompositionAlgebra::multiply(const Vector& a, const Vector& b) const {
    std::size_t n = dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(b[j]) == 0) continue;
            out = out + Rational(a[i] * b[j]) * table_[i][j];
        }
    }
    return out;
}

Rational CompositionAlgebra::inner(const Vector& a, const Vector& b) const { return dot(a, norm_matrix_ * b); }

std::vector<Polynomial> CompositionAlgebra::multiply(const std::vector<Polynomial>& a,
                                                     const std::vector<Polynomial>& b) const {
    std::size_t n = dim();
    std::size_t vars = a.empty() ? 0 : a[0].nvars();
    std::vector<Polynomial> out(n, Polynomial(vars));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Polynomial p = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(table_[i][j][k]) != 0) out[k] += table_[i][j][k] * p;
        }
    }
    return out;
}

Polynomial CompositionAlgebra::inner(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const {
    std::size_t vars = a.empty() ? 0 : a[0].nvars();
    Polynomial out(vars);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (sgn(norm_matrix_(i, j)) != 0) out += norm_matrix_(i, j) * (a[i] * b[j]);
    return out;
}

Polynomial CompositionAlgebra::norm(const std::vector<Polynomial>& a) const { return inner(a, a); }

Rational CompositionAlgebra::scalar_part(const Vector& a) const {
    std::size_t k = 0;
    while (sgn(unit_[k]) == 0) ++k;
    Rational s = a[k] / unit_[k];
    if (a != s * unit_) fail(Errc::IdentityFailure, "element of " + name_ + " is not a scalar");
    return s;
}

namespace {

std::vector<std::vector<Vector>> table_from(std::size_t n, const auto& product) {
    std::vector<std::vector<Vector>> t(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = product(unit_vector(n, i), unit_vector(n, j));
    return t;
}

Polynomial quad(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> terms) {
    Polynomial p(n);
    for (auto [i, j, c] : terms) p += Rational(c) * (Polynomial::variable(n, i) * Polynomial::variable(n, j));
    return p;
}

}  // namespace

CompositionAlgebra split_rationals() {
    return CompositionAlgebra("Q", {1}, {{{1}}}, Matrix::identity(1), quad(1, {{0, 0, 1}}));
}

CompositionAlgebra split_complex() {
    auto t = table_from(2, [](const Vector& a, const Vector& b) { return Vector{a[0] * b[0], a[1] * b[1]}; });
    Matrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    return CompositionAlgebra("QxQ", {1, 1}, t, swap, quad(2, {{0, 1, 1}}));
}

CompositionAlgebra split_quaternions() {
    // (m11, m12, m21, m22)
    auto t = table_from(4, [](const Vector& a, const Vector& b) {
        return Vector{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                      a[2] * b[1] + a[3] * b[3]};
    });
    Matrix adj(4, 4);
    adj(0, 3) = 1;
    adj(1, 1) = -1;
    adj(2, 2) = -1;
    adj(3, 0) = 1;
    return CompositionAlgebra("Mat2", {1, 0, 0, 1}, t, adj, quad(4, {{0, 3, 1}, {1, 2, -1}}));
}

CompositionAlgebra split_octonions() {
    // (a, u1, u2, u3, v1, v2, v3, b) for [[a, u], [v, b]]
    auto t = table_from(8, [](const Vector& x, const Vector& y) {
        auto u = [&](const Vector& z, std::size_t i) { return z[1 + i]; };
        auto v = [&](const Vector& z, std::size_t i) { return z[4 + i]; };
        Vector out(8);
        out[0] = x[0] * y[0];
        out[7] = x[7] * y[7];
        for (std::size_t i = 0; i < 3; ++i) {
            out[0] += u(x, i) * v(y, i);
            out[7] += v(x, i) * u(y, i);
        }
        for (std::size_t i = 0; i < 3; ++i) {
            std::size_t j = (i + 1) % 3;
            std::size_t k = (i + 2) % 3;
            Rational vxv = v(x, j) * v(y, k) - v(x, k) * v(y, j);
            Rational uxu = u(x, j) * u(y, k) - u(x, k) * u(y, j);
            out[1 + i] = x[0] * u(y, i) + y[7] * u(x, i) - vxv;
            out[4 + i] = y[0] * v(x, i) + x[7] * v(y, i) + uxu;
        }
        return out;
    });
    Matrix conj(8, 8);
    conj(0, 7) = 1;
    conj(7, 0) = 1;
    for (std::size_t i = 1; i < 7; ++i) conj(i, i) = -1;
    return CompositionAlgebra("Zorn", {1, 0, 0, 0, 0, 0, 0, 1}, t, conj,
                              quad(8, {{0, 7, 1}, {1, 4, -1}, {2, 5, -1}, {3, 6, -1}}));
}

}  // namespace cubix
