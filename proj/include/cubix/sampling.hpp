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
#include <random>
#include <utility>
#include <vector>

#include "cubix/polynomial.hpp"
#include "cubix/rational.hpp"

namespace cubix {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr std::size_t kDefaultBudget = 200000;

/// Run-wide knobs: the seed of the deterministic sample stream and the cap
/// on dense solves (rows x unknowns).
struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::size_t budget = kDefaultBudget;
};

/// Deterministic stream of small integers in [-9, 9].
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : rng_(seed) {}

    long next_int() { return static_cast<long>(rng_() % 19) - 9; }
    Rational next() { return Rational(next_int()); }

    Vector next_vector(std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = next();
        return v;
    }

    /// Derives an independent stream, so that sub-computations do not
    /// perturb each other's samples.
    SampleStream fork(std::uint64_t salt) { return SampleStream(rng_() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

private:
    std::mt19937_64 rng_;
};

/// Throws BudgetExceeded when rows * cols is over the budget.
void check_budget(std::size_t rows, std::size_t cols, std::size_t budget, const char* what);

using Sample = std::pair<Vector, Rational>;

/// The unique homogeneous form of the given degree matching every sample.
/// Errors: Underdetermined, Inconsistent, BudgetExceeded.
Polynomial interpolate_form(unsigned degree, std::size_t nvars, const std::vector<Sample>& samples,
                            std::size_t budget = kDefaultBudget);

/// Coefficient vector of a homogeneous form in the given monomial basis.
Vector coefficients(const Polynomial& p, const std::vector<Exponent>& basis);

/// Inverse of coefficients().
Polynomial from_coefficients(std::size_t nvars, const std::vector<Exponent>& basis, const Vector& coeffs);

}  // namespace cubix
