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

#include "cubix/algebra.hpp"
#include "cubix/polynomial.hpp"
#include "cubix/quadratic_map.hpp"

namespace cubix {

/// The generic minimal polynomial data of a rank-3 algebra.
struct CubicData {
    Polynomial trace;         // T, linear
    Polynomial quad;          // S, quadratic
    Polynomial norm;          // N, cubic
    QuadraticMap adjoint;     // x -> x^#
    Matrix trace_form;        // T(b_i b_j)
    Vector unit;

    std::size_t dim() const { return unit.size(); }
};

/// Solves x^3 - T(x) x^2 + S(x) x - N(x) e = 0 for (T, S, N) jointly by
/// interpolation at sample points. Throws NotRankThree, BudgetExceeded.
CubicData cubic_data(const Algebra& a, const Options& opts = {});

/// Number of unknowns times equations cubic_data would solve.
std::size_t cubic_data_cost(std::size_t n);

/// Builds the cubic data from a known norm with N(e) = 1: T = dN_e,
/// x^# = T_form^{-1} grad N(x), S = T(x^#). No interpolation.
CubicData cubic_data_from_norm(const Algebra& a, const Polynomial& norm);

Rational trace_bilinear(const CubicData& d, const Element& x, const Element& y);

Element adjoint_apply(const CubicData& d, const Element& x);

/// (x + y)^# - x^# - y^#.
Element sharp_product(const CubicData& d, const Element& x, const Element& y);

/// x^# / N(x). Throws NotInvertible when N(x) = 0.
Element inverse(const CubicData& d, const Element& x);

/// T(x, y) x - x^# # y, the rank-3 form of U_x(y).
Element u_rank3(const CubicData& d, const Element& x, const Element& y);

/// Number of sampled points at which each rank-3 identity failed.
struct IdentityTally {
    std::size_t points = 0;
    std::size_t cayley_hamilton = 0;    // x^3 - T x^2 + S x - N e
    std::size_t adjoint_involution = 0; // (x^#)^# = N(x) x
    std::size_t u_operator = 0;         // U_x(y) = T(x,y) x - x^# # y
    std::size_t norm_of_adjoint = 0;    // N(x^#) = N(x)^2
    std::size_t trace_of_adjoint = 0;   // T(x, x^#) = 3 N(x)

    bool all_hold() const {
        return cayley_hamilton + adjoint_involution + u_operator + norm_of_adjoint + trace_of_adjoint == 0;
    }
};

IdentityTally check_cubic_identities(const Algebra& a, const CubicData& d, std::size_t points,
                                     const Options& opts = {});

/// Matrix of third partials: row i*n + j, column k holds d^3 N / dx_i dx_j dx_k.
Matrix third_derivatives(const Polynomial& cubic);

}  // namespace cubix
