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

#include <string>
#include <vector>

#include "cubix/matrix.hpp"
#include "cubix/polynomial.hpp"

namespace cubix {

/// Split composition algebra over Q with an explicit (possibly
/// non-commutative, non-associative) multiplication table.
class CompositionAlgebra {
public:
    CompositionAlgebra(std::string name, Vector unit, std::vector<std::vector<Vector>> table, Matrix conjugation,
                       Polynomial norm_form);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return unit_.size(); }
    const Vector& unit() const { return unit_; }
    const Polynomial& norm_form() const { return norm_; }

    Vector multiply(const Vector& a, const Vector& b) const;
    Vector conjugate(const Vector& a) const { return conj_ * a; }
    Rational norm(const Vector& a) const { return norm_.eval(a); }
    /// Polarization with <a, a> = |a|^2.
    Rational inner(const Vector& a, const Vector& b) const;

    /// Same operations on elements with polynomial coordinates.
    std::vector<Polynomial> multiply(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const;
    Polynomial inner(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const;
    Polynomial norm(const std::vector<Polynomial>& a) const;

    /// The scalar s with a = s * 1; throws IdentityFailure if a is not scalar.
    Rational scalar_part(const Vector& a) const;

private:
    std::string name_;
    Vector unit_;
    std::vector<std::vector<Vector>> table_;
    Matrix conj_;
    Polynomial norm_;
    Matrix norm_matrix_;  // symmetric, <a, b> = a^T M b
};

CompositionAlgebra split_rationals();        // Q
CompositionAlgebra split_complex();          // Q x Q, conjugation swaps factors
CompositionAlgebra split_quaternions();      // 2x2 matrices, conjugation = adjugate
CompositionAlgebra split_octonions();        // Zorn vector matrices

}  // namespace cubix
