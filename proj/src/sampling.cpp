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

#include "cubix/sampling.hpp"

#include <string>

#include "cubix/error.hpp"
#include "cubix/matrix.hpp"

namespace cubix {

void check_budget(std::size_t rows, std::size_t cols, std::size_t budget, const char* what) {
    if (rows * cols > budget) {
        fail(Errc::BudgetExceeded, std::string(what) + ": " + std::to_string(rows) + " x " + std::to_string(cols) +
                                       " system exceeds the solve budget of " + std::to_string(budget));
    }
}

Vector coefficients(const Polynomial& p, const std::vector<Exponent>& basis) {
    Vector v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coeff(basis[i]);
    return v;
}

Polynomial from_coefficients(std::size_t nvars, const std::vector<Exponent>& basis, const Vector& coeffs) {
    Polynomial p(nvars);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
    return p;
}

Polynomial interpolate_form(unsigned degree, std::size_t nvars, const std::vector<Sample>& samples,
                            std::size_t budget) {
    auto basis = homogeneous_monomials(nvars, degree);
    check_budget(samples.size(), basis.size(), budget, "interpolate_form");
    if (samples.size() < basis.size()) {
        fail(Errc::Underdetermined, "need at least " + std::to_string(basis.size()) + " samples, got " +
                                        std::to_string(samples.size()));
    }
    Matrix a(samples.size(), basis.size());
    Vector b(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        require_dim(samples[i].first.size(), nvars, "interpolation sample");
        for (std::size_t j = 0; j < basis.size(); ++j) a(i, j) = monomial_value(basis[j], samples[i].first);
        b[i] = samples[i].second;
    }
    SolveResult res = solve_auto(a, b);
    if (res.status == SolveStatus::Inconsistent) fail(Errc::Inconsistent, "no form of this degree fits the samples");
    if (res.status == SolveStatus::Underdetermined) fail(Errc::Underdetermined, "samples do not pin down the form");
    return from_coefficients(nvars, basis, res.solution);
}

}  // namespace cubix
