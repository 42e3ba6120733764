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

#include "cubix/cremona.hpp"
#include "cubix/cubic.hpp"
#include "cubix/structure.hpp"

namespace cubix {

/// A point of P(Q + V + V + Q), coordinates (alpha, x, y, beta).
struct ProjPoint {
    Vector coords;

    std::size_t n() const { return (coords.size() - 2) / 2; }
    const Rational& alpha() const { return coords.front(); }
    const Rational& beta() const { return coords.back(); }
    Vector x() const;
    Vector y() const;

    static ProjPoint from_blocks(const Rational& alpha, const Vector& x, const Vector& y, const Rational& beta);
};

/// Equality up to a nonzero scalar: all 2x2 minors vanish. Zero vectors are never equal.
bool proj_equal(const ProjPoint& p, const ProjPoint& q);

/// [1 : x : x^# : N(x)].
ProjPoint mu(const CubicData& d, const Element& x);
ProjPoint mu(const QuadraticMap& adjoint, const Polynomial& norm, const Element& x);

ProjPoint zero_point(std::size_t n);      // [1 : 0 : 0 : 0]
ProjPoint infinity_point(std::size_t n);  // [0 : 0 : 0 : 1]

/// Affine chart: alpha y = z^# and alpha^2 beta = N(z). With alpha = 0 only
/// the point at infinity and the listed boundary points are accepted.
bool on_variety(const CubicData& d, const ProjPoint& p, const std::vector<ProjPoint>& boundary = {});

ProjPoint apply(const Matrix& m, const ProjPoint& p);

/// The linear map l with l(mu(x)) = mu(x + x_star).
Matrix translation(const CubicData& d, const CremonaPair& p, const Element& x_star);

/// t -> [alpha(t) : x(t) : y(t) : beta(t)], entries univariate of degree <= 3.
struct CubicCurve {
    std::vector<Polynomial> param;

    ProjPoint at(const Rational& t) const;
    /// Coefficients of t^3, the point reached at t = infinity.
    ProjPoint leading() const;
    int degree() const;
    /// The first `count` integers t >= 2 with alpha(t) != 0.
    std::vector<Rational> chart_parameters(std::size_t count) const;
};

/// The twisted cubic through mu(x1) (t = 0), mu(x2) (t = 1) and mu(x3)
/// (t = infinity). Throws NonGenericTriple.
CubicCurve cubic_through(const CubicData& d, const CremonaPair& p, const Element& x1, const Element& x2,
                         const Element& x3);

/// T(x^#, y^#) - beta N(x) - alpha N(y) - (T(x, y) - alpha beta)^2 / 4 in the
/// variables (alpha, x, y, beta).
Polynomial tangent_quartic(const CubicData& d);

/// Q(c(t)) as a univariate polynomial.
Polynomial restrict_to_curve(const Polynomial& q, const CubicCurve& c);

/// {w : d^3 Q_w = 0}, i.e. the directions w with D_w Q = 0 identically.
Subspace quartic_vertex(const Polynomial& q);

/// 0 + Rad + Rad + 0 in the coordinates of Q.
Subspace radical_vertex(const Subspace& radical);

/// (alpha, x, y, beta) -> (beta, y, x, alpha).
Matrix rho_j(std::size_t n);

/// [alpha : x + alpha w : y + x # w + alpha w^# : beta + T(y, w) + T(x, w^#) + alpha N(w)].
Matrix rho_translation(const CubicData& d, const Element& w);

/// [alpha : g x : g^# y : eta beta] for g in the structure group.
/// Throws NotInStructureGroup.
Matrix rho_structure(const CubicData& d, const CremonaPair& p, const Matrix& g);

/// c with Q o m = c Q, or 0 when no such scalar exists.
Rational quartic_multiplier(const Polynomial& q, const Matrix& m);

/// [alpha : x mod R : y mod R : beta]. Throws InsideCenter for points of 0 + Rad + Rad + 0.
ProjPoint project_ss(const Decomposition& dec, const ProjPoint& p);

}  // namespace cubix
