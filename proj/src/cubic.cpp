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

#include "cubix/cubic.hpp"

#include "cubix/error.hpp"

namespace cubix {

namespace {

std::size_t cubic_unknowns(std::size_t n) { return n + n * (n + 1) / 2 + n * (n + 1) * (n + 2) / 6; }

// One projected equation <c, x^3 - T x^2 + S x - N e> = 0 per sample: the
// norm only enters along e, so the points must separate cubic forms.
std::size_t initial_samples(std::size_t n) { return cubic_unknowns(n) + 8; }

// Quadratic forms of x -> x^2 read off the structure constants.
std::vector<Polynomial> square_forms(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Polynomial> sq(n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Exponent e(n, 0);
            e[i] += 1;
            e[j] += 1;
            Rational mult = i == j ? 1 : 2;
            const Vector& c = a.table(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(c[k]) != 0) sq[k].add_term(e, mult * c[k]);
        }
    }
    return sq;
}

Matrix trace_form_of(const Algebra& a, const Polynomial& trace) {
    std::size_t n = a.dim();
    Vector t(n);
    for (std::size_t i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        t[i] = trace.coeff(e);
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dot(t, a.table(i, j));
    return m;
}

QuadraticMap assemble_adjoint(const Algebra& a, const Polynomial& trace, const Polynomial& quad) {
    std::size_t n = a.dim();
    auto sq = square_forms(a);
    std::vector<Polynomial> forms;
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial f = sq[k] - trace * Polynomial::variable(n, k);
        if (sgn(a.unit()[k]) != 0) f += a.unit()[k] * quad;
        forms.push_back(std::move(f));
    }
    return QuadraticMap(std::move(forms));
}

}  // namespace

std::size_t cubic_data_cost(std::size_t n) { return cubic_unknowns(n) * initial_samples(n); }

CubicData cubic_data(const Algebra& a, const Options& opts) {
    std::size_t n = a.dim();
    std::size_t r = rank(a, opts);
    if (r != 3) fail(Errc::NotRankThree, "algebra has rank " + std::to_string(r));

    auto b1 = homogeneous_monomials(n, 1);
    auto b2 = homogeneous_monomials(n, 2);
    auto b3 = homogeneous_monomials(n, 3);
    std::size_t unknowns = b1.size() + b2.size() + b3.size();
    std::size_t rows = initial_samples(n);
    check_budget(rows, unknowns, opts.budget, "cubic_data");

    SampleStream stream = SampleStream(opts.seed).fork(0x43554249);
    Matrix m;
    Vector rhs;
    for (int attempt = 0; attempt < 3; ++attempt) {
        check_budget(rows, unknowns, opts.budget, "cubic_data");
        Matrix next(rows, unknowns);
        Vector next_rhs(rows);
        std::size_t old = m.rows();
        for (std::size_t i = 0; i < old; ++i) {
            for (std::size_t j = 0; j < unknowns; ++j) next(i, j) = m(i, j);
            next_rhs[i] = rhs[i];
        }
        for (std::size_t i = old; i < rows; ++i) {
            Element x = stream.next_vector(n);
            Vector c = stream.next_vector(n);
            Element x2 = a.square(x);
            Rational cx = dot(c, x), cx2 = dot(c, x2), ce = dot(c, a.unit());
            for (std::size_t q = 0; q < n; ++q) next(i, q) = -x[q] * cx2;
            if (sgn(cx) != 0)
                for (std::size_t q = 0; q < b2.size(); ++q) next(i, n + q) = monomial_value(b2[q], x) * cx;
            if (sgn(ce) != 0)
                for (std::size_t q = 0; q < b3.size(); ++q) next(i, n + b2.size() + q) = -monomial_value(b3[q], x) * ce;
            next_rhs[i] = -dot(c, a.multiply(x, x2));
        }
        m = std::move(next);
        rhs = std::move(next_rhs);
        SolveResult res = solve_auto(m, rhs);
        if (res.status == SolveStatus::Inconsistent)
            fail(Errc::NotRankThree, "no cubic minimal polynomial fits the samples");
        if (res.status == SolveStatus::Unique) {
            CubicData d;
            d.unit = a.unit();
            Vector t(res.solution.begin(), res.solution.begin() + static_cast<std::ptrdiff_t>(n));
            Vector s(res.solution.begin() + static_cast<std::ptrdiff_t>(n),
                     res.solution.begin() + static_cast<std::ptrdiff_t>(n + b2.size()));
            Vector c(res.solution.begin() + static_cast<std::ptrdiff_t>(n + b2.size()), res.solution.end());
            d.trace = from_coefficients(n, b1, t);
            d.quad = from_coefficients(n, b2, s);
            d.norm = from_coefficients(n, b3, c);
            d.adjoint = assemble_adjoint(a, d.trace, d.quad);
            d.trace_form = trace_form_of(a, d.trace);
            return d;
        }
        rows += unknowns / 4 + 8;
    }
    fail(Errc::NotRankThree, "samples never determined (T, S, N)");
}

CubicData cubic_data_from_norm(const Algebra& a, const Polynomial& norm) {
    std::size_t n = a.dim();
    require_dim(norm.nvars(), n, "norm arity");
    if (!norm.is_homogeneous(3)) fail(Errc::NormalizationFailed, "norm is not a cubic form");
    if (norm.eval(a.unit()) != 1) fail(Errc::NormalizationFailed, "norm does not take the value 1 at the unit");
    CubicData d;
    d.unit = a.unit();
    std::vector<Polynomial> grad;
    Vector t(n);
    for (std::size_t i = 0; i < n; ++i) {
        grad.push_back(norm.derivative(i));
        t[i] = grad.back().eval(a.unit());
    }
    d.trace = Polynomial::linear(t);
    d.norm = norm;
    d.trace_form = trace_form_of(a, d.trace);
    Matrix inv = inverse(d.trace_form);
    std::vector<Polynomial> forms(n, Polynomial(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(inv(k, j)) != 0) forms[k] += inv(k, j) * grad[j];
    d.quad = Polynomial(n);
    for (std::size_t k = 0; k < n; ++k)
        if (sgn(t[k]) != 0) d.quad += t[k] * forms[k];
    d.adjoint = QuadraticMap(std::move(forms));
    return d;
}

Rational trace_bilinear(const CubicData& d, const Element& x, const Element& y) { return dot(x, d.trace_form * y); }

Element adjoint_apply(const CubicData& d, const Element& x) { return d.adjoint.apply(x); }

Element sharp_product(const CubicData& d, const Element& x, const Element& y) { return d.adjoint.polar(x, y); }

Element inverse(const CubicData& d, const Element& x) {
    Rational nx = d.norm.eval(x);
    if (sgn(nx) == 0) fail(Errc::NotInvertible, "element has zero norm");
    return Rational(1 / nx) * adjoint_apply(d, x);
}

Element u_rank3(const CubicData& d, const Element& x, const Element& y) {
    return trace_bilinear(d, x, y) * x - sharp_product(d, adjoint_apply(d, x), y);
}

IdentityTally check_cubic_identities(const Algebra& a, const CubicData& d, std::size_t points, const Options& opts) {
    IdentityTally t;
    SampleStream stream = SampleStream(opts.seed).fork(0x49444e54);
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < points; ++i) {
        Element x = stream.next_vector(n);
        Element y = stream.next_vector(n);
        Element x2 = a.square(x);
        Element x3 = a.multiply(x, x2);
        Rational nx = d.norm.eval(x);
        Element ch = x3 - d.trace.eval(x) * x2 + d.quad.eval(x) * x - nx * a.unit();
        if (!is_zero(ch)) ++t.cayley_hamilton;
        Element xs = adjoint_apply(d, x);
        if (adjoint_apply(d, xs) != nx * x) ++t.adjoint_involution;
        Element ux = Rational(2) * a.multiply(x, a.multiply(x, y)) - a.multiply(x2, y);
        if (ux != u_rank3(d, x, y)) ++t.u_operator;
        if (d.norm.eval(xs) != nx * nx) ++t.norm_of_adjoint;
        if (trace_bilinear(d, x, xs) != 3 * nx) ++t.trace_of_adjoint;
        ++t.points;
    }
    return t;
}

Matrix third_derivatives(const Polynomial& cubic) {
    std::size_t n = cubic.nvars();
    Matrix m(n * n, n);
    for (const auto& [e, c] : cubic.terms()) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i]) support.push_back(i);
        for (auto i : support) {
            for (auto j : support) {
                for (auto k : support) {
                    long ei = e[i];
                    long ej = e[j] - (j == i);
                    long ek = e[k] - (k == i) - (k == j);
                    if (ej <= 0 || ek <= 0) continue;
                    m(i * n + j, k) += c * Rational(ei * ej * ek);
                }
            }
        }
    }
    return m;
}

}  // namespace cubix
