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
#include <vector>

#include "cubix/matrix.hpp"
#include "cubix/rational.hpp"
#include "cubix/sampling.hpp"

namespace cubix {

using Element = Vector;

/// Finite-dimensional commutative unital algebra over Q, given by structure
/// constants: table(i, j) is the coordinate vector of b_i * b_j.
class Algebra {
public:
    Algebra() = default;
    /// table is indexed [i][j]. Throws DimensionMismatch on bad shapes,
    /// IdentityFailure when the table is not symmetric or unit is not a unit.
    Algebra(Vector unit, const std::vector<std::vector<Vector>>& table);

    std::size_t dim() const { return n_; }
    const Vector& unit() const { return unit_; }
    const Vector& table(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

    Element multiply(const Element& x, const Element& y) const;
    Element square(const Element& x) const { return multiply(x, x); }

    /// Matrix of y -> x y.
    Matrix left_mult(const Element& x) const;

    bool operator==(const Algebra& o) const { return unit_ == o.unit_ && table_ == o.table_; }

private:
    struct Term {
        std::uint32_t j;
        std::uint32_t k;
        Rational c;
    };

    std::size_t n_ = 0;
    Vector unit_;
    std::vector<Vector> table_;
    std::vector<std::vector<Term>> sparse_;  // sparse_[i]: nonzero c_ij^k
};

/// Builds an algebra from any bilinear product on Q^n by tabulating basis
/// products.
template <class Product>
Algebra tabulate(std::size_t n, const Vector& unit, Product&& product) {
    std::vector<std::vector<Vector>> t(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            t[i][j] = product(unit_vector(n, i), unit_vector(n, j));
            t[j][i] = t[i][j];
        }
    }
    return Algebra(unit, t);
}

/// dim span{e, x, x^2, ...}, maximised over five samples.
std::size_t rank(const Algebra& a, const Options& opts = {});

/// Dimension of the subalgebra generated by e and x.
std::size_t element_degree(const Algebra& a, const Element& x);

struct JordanCheck {
    bool holds = false;
    /// True when the polarized identity was checked on every basis triple;
    /// otherwise the identity was evaluated at `pairs` sampled pairs.
    bool symbolic = false;
    std::size_t pairs = 0;
};

/// Checks x^2 (x y) = x (x^2 y): on all basis data for dim <= 10, else at
/// `min_pairs` sampled pairs (and always at least 50).
JordanCheck check_jordan(const Algebra& a, const Options& opts = {}, std::size_t min_pairs = 50);

/// The defect x^2 (x y) - x (x^2 y).
Element jordan_defect(const Algebra& a, const Element& x, const Element& y);

/// 2 L_x^2 - L_{x^2}.
Matrix u_operator(const Algebra& a, const Element& x);

/// x (y u) + y (x u) - (x y) u, i.e. half of U_{x,y}(u).
Element isotope_product(const Algebra& a, const Element& x, const Element& y, const Element& u);

/// True iff the product of every basis vector with every vector of s lies in s.
bool is_ideal(const Algebra& a, const Subspace& s);

/// Componentwise product of algebras.
Algebra make_product(const std::vector<Algebra>& factors);

}  // namespace cubix
