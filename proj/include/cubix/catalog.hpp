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
#include <string>
#include <utility>
#include <vector>

#include "cubix/algebra.hpp"
#include "cubix/composition.hpp"
#include "cubix/cubic.hpp"
#include "cubix/quadratic_map.hpp"

namespace cubix {

struct CatalogEntry {
    std::string name;
    std::string description;
    Algebra algebra;
    std::optional<Polynomial> closed_norm;
    std::optional<QuadraticMap> closed_adjoint;
    /// Rank < 3 entries carry a chosen cubic norm and the matching normed map.
    std::optional<Polynomial> designated_norm;
    std::optional<QuadraticMap> normed_map;

    std::size_t expected_rank = 0;
    std::optional<std::size_t> expected_radical_dim;
    std::optional<std::pair<std::size_t, std::size_t>> expected_ss_signature;
    std::vector<std::size_t> expected_penico;

    bool rank_three() const { return expected_rank == 3; }
};

/// Product (lambda, w)(lambda', w') = (lambda lambda' - q(w, w'), lambda w' + lambda' w)
/// where q(w, w') = w^T Q w'.
Algebra make_spin_factor(const Matrix& q_matrix);

/// Hermitian 3x3 matrices over A with product (MN + NM) / 2.
/// Coordinates: r1, r2, r3, then the blocks x1, x2, x3 of A, placed at
/// (2,3), (3,1), (2,1) with conjugates at the transposed positions.
Algebra make_herm3(const CompositionAlgebra& a);

/// r1 r2 r3 + 2 <x1 x2, x3> - r1 |x1|^2 - r2 |x2|^2 - r3 |x3|^2 in the
/// coordinates of make_herm3.
Polynomial herm3_norm(const CompositionAlgebra& a);

/// 3x3 matrices, coordinates m_ij row by row, symmetrized product.
Algebra make_m3();

/// Skew 6x6 matrices A (coordinates a_ij, i < j, lexicographic) viewed as
/// X = J^{-1} A, with J three diagonal blocks [[0, 1], [-1, 0]].
Algebra make_alt6();

/// Pfaffian of a skew matrix given by its upper-triangle entries.
Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& skew);

/// Determinant and adjugate of a square matrix of polynomials.
Polynomial symbolic_det3(const std::vector<std::vector<Polynomial>>& m);
std::vector<std::vector<Polynomial>> symbolic_adjugate3(const std::vector<std::vector<Polynomial>>& m);

/// Throws UnknownName.
CatalogEntry make_named(const std::string& name);

/// Names listed by the catalog command, in display order.
std::vector<std::string> catalog_names();

/// Distinct rank-3 entries (aliases removed).
std::vector<std::string> rank3_names();

/// Interpolated cubic data when the solve fits the budget, else the
/// closed-norm construction. Throws BudgetExceeded if neither is possible.
CubicData entry_cubic_data(const CatalogEntry& entry, const Options& opts = {});

}  // namespace cubix
