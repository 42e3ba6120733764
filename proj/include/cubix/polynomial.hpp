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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubix/rational.hpp"

namespace cubix {

using Exponent = std::vector<std::uint16_t>;

/// Orders exponent vectors lexicographically, largest first, so that
/// begin() is the lexicographically-first monomial (x1 > x2 > ... ).
struct LexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, LexDescending>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(std::size_t nvars, Exponent exps, const Rational& c);
    /// Sum of coeffs[i] * x_i.
    static Polynomial linear(const Vector& coeffs);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True for the zero polynomial as well.
    bool is_homogeneous(int d) const;

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    /// Exact value at x. Throws DimensionMismatch when x.size() != nvars.
    Rational eval(std::span<const Rational> x) const;

    Polynomial derivative(std::size_t var) const;

    /// p(values[0], ..., values[nvars-1]); all values must share one ring of variables.
    Polynomial substitute(const std::vector<Polynomial>& values) const;

    /// Re-embeds into a larger variable set: variable i becomes variable offset + i.
    Polynomial shifted(std::size_t new_nvars, std::size_t offset) const;

    Polynomial pow(unsigned k) const;

    /// Coefficient of the lexicographically-first monomial (0 for zero).
    Rational leading_coefficient() const;

    /// Exact division by the variable x_var; nullopt-like failure reported by
    /// returning false when some term is not divisible.
    bool divide_by_variable(std::size_t var, Polynomial& out) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Human-readable form, e.g. "x1^2 - 1/2*x1*x3".
    std::string to_string() const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// All exponent vectors of total degree d in n variables, lexicographically
/// descending. Used as the coefficient basis for homogeneous forms.
std::vector<Exponent> homogeneous_monomials(std::size_t nvars, unsigned degree);

/// Value of the monomial x^e.
Rational monomial_value(const Exponent& e, std::span<const Rational> x);

}  // namespace cubix
