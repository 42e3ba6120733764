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

#include <optional>
#include <utility>
#include <vector>

#include "cubix/algebra.hpp"
#include "cubix/cubic.hpp"

namespace cubix {

/// Kernel of r -> Hess(N)(r).
Subspace radical(const Algebra& a, const CubicData& d);

/// Terms R^[1] = Rad, R^[k+1] = (R^[k])^2 + (R^[k])^2 J, ending with the zero space.
struct PenicoSeries {
    std::vector<Subspace> terms;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& t : terms) out.push_back(t.dim());
        return out;
    }
};

/// Throws NonTerminating if the dimensions stop decreasing before reaching 0.
PenicoSeries penico_series(const Algebra& a, const CubicData& d);

/// The same recursion from an arbitrary ideal.
PenicoSeries penico_from(const Algebra& a, const Subspace& start);

struct Decomposition {
    Subspace radical;
    PenicoSeries penico;
    std::size_t ss_dim = 0;
    std::size_t ss_rank = 0;
    /// Columns: the standard vectors completing Rad to a basis.
    Matrix complement;
    /// Quotient algebra on the complement basis.
    Algebra ss_algebra;
    /// Descended forms: N(x mod R) = N(x), (x mod R)^# = x^# mod R.
    Polynomial ss_norm;
    Polynomial ss_trace;
    QuadraticMap ss_adjoint;
    /// Columns: a multiplicative, unital lift of the quotient basis, when found.
    std::optional<Matrix> section;

    /// Coordinates of x mod R in the complement basis.
    Vector project(const Vector& x) const;

    Matrix projector;  // ss_dim x n
};

Decomposition decompose(const Algebra& a, const CubicData& d, const Options& opts = {});

/// Product x (y u) + y (x u) - (x y) u with unit u^{-1}. Throws NotInvertible.
Algebra isotope(const Algebra& a, const CubicData& d, const Element& u);

/// (ss_rank, ss_dim).
std::pair<std::size_t, std::size_t> ss_signature(const Algebra& a, const CubicData& d, const Options& opts = {});

}  // namespace cubix
