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

#include "cubix/rational.hpp"

namespace cubix {

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);
    void set_col(std::size_t j, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);

    bool operator==(const Matrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduces m to reduced row-echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);

/// Throws Error(SingularMatrix) when m is not square-invertible.
Matrix inverse(const Matrix& m);

Rational determinant(const Matrix& m);

/// Linear subspace of Q^n held as a reduced row-echelon basis. Two spanning
/// sets of the same space give identical basis matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;

    /// Rows c with c . v = 0 for all v in the subspace (itself a Subspace).
    Subspace annihilator() const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Kernel {v : m v = 0}. dim = cols - rank.
Subspace nullspace(const Matrix& m);

/// Same kernel via pivot columns found modulo a prime and one verified
/// solve per free column. Falls back to nullspace() if a solve fails.
Subspace nullspace_large(const Matrix& m);

/// Picks nullspace or nullspace_large by size.
Subspace nullspace_auto(const Matrix& m);

/// Completion of a subspace R to a basis by greedily chosen standard vectors.
struct Complement {
    std::vector<std::size_t> indices;  // chosen coordinates
    Matrix basis;                      // n x m, columns e_i for i in indices
    /// Inverse of [basis | R]: the first m rows give complement coordinates,
    /// the rest coordinates along the echelon basis of R.
    Matrix coords;
};

Complement standard_complement(const Subspace& r);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    /// A particular solution (free variables zero) unless Inconsistent.
    Vector solution;
    std::size_t rank = 0;
};

/// Exact solve of A x = b by rational elimination.
SolveResult solve(const Matrix& a, const Vector& b);

/// Same contract, for large systems: elimination modulo word-size primes,
/// rational reconstruction, then an exact check of A x = b over Q. Falls back
/// to more primes when reconstruction cannot be certified. A system whose
/// rank drops modulo two independent primes is reported Underdetermined
/// without a particular solution.
SolveResult solve_large(const Matrix& a, const Vector& b);

/// Picks solve or solve_large by size.
SolveResult solve_auto(const Matrix& a, const Vector& b);

/// Solves A X = B column by column with one elimination. Each column result
/// is reported separately.
std::vector<SolveResult> solve_columns(const Matrix& a, const Matrix& b);

}  // namespace cubix
