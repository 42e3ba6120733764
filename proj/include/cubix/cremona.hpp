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
#include <vector>

#include "cubix/algebra.hpp"
#include "cubix/cubic.hpp"
#include "cubix/quadratic_map.hpp"

namespace cubix {

/// G(F(x)) = N(x) x, F(G(y)) = M(y) y, M(F(x)) = N(x)^2, and
/// dN_x(dx) = dx^T bf F(x), dM_y(dy) = dy^T bg G(y).
struct CremonaPair {
    QuadraticMap f;
    QuadraticMap g;
    Polynomial n;
    Polynomial m;
    Matrix bf;
    Matrix bg;

    std::size_t dim() const { return f.n(); }
};

/// A quadratic map with a designated cubic norm class.
struct NormedMap {
    QuadraticMap f;
    Polynomial eta;
};

/// Outcome of each identity, checked symbolically.
struct PairCheck {
    bool g_of_f = false;
    bool f_of_g = false;
    bool m_of_f = false;
    bool crucial_f = false;
    bool crucial_g = false;

    bool all() const { return g_of_f && f_of_g && m_of_f && crucial_f && crucial_g; }
};

PairCheck verify_pair(const CremonaPair& p);

/// Scales N so that its lexicographically-first coefficient is 1.
/// Throws NotBirational22, Fake, BudgetExceeded.
CremonaPair certify(const QuadraticMap& f, const Options& opts = {});

/// Rows b_i with dN/dx_i = sum_j b_ij f_j. Throws NoSolution.
Matrix bf_solve(const QuadraticMap& f, const Polynomial& n);

/// (adjoint, adjoint, N, N) with bf = bg = the trace form; no solve.
/// Throws IdentityFailure when an identity fails.
CremonaPair adjoint_pair(const CubicData& d);

/// The pair for L1 o F o L2 (N becomes N o L2, rescaled). Throws SingularMatrix.
CremonaPair compose_linear(const CremonaPair& p, const Matrix& l1, const Matrix& l2);

struct MapAlgebra {
    Algebra algebra;
    CubicData cubic;
    /// adjoint of `algebra` = left o F o right.
    Matrix left;
    Matrix right;
    Element base;
};

/// The algebra whose unit is `base` and whose adjoint is linearly
/// equivalent to F. Throws NotInvertibleBase, NormalizationFailed.
MapAlgebra algebra_from_map(const CremonaPair& p, const Element& base, const Options& opts = {});

/// Same with the first sampled point where N does not vanish.
MapAlgebra algebra_from_map(const CremonaPair& p, const Options& opts = {});

/// Kernel of the Hessian of N.
Subspace map_radical(const CremonaPair& p);

/// Alternating series on both sides: f[k+1] = span dG_r(s) over r, s in g[k],
/// and g[k+1] likewise with F on f[k].
struct MapPenico {
    std::vector<Subspace> f_terms;
    std::vector<Subspace> g_terms;
    /// dF_x(f[k]) within g[k] and dG_y(g[k]) within f[k] for all x, y and every k.
    bool ideal_criterion = false;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& t : f_terms) out.push_back(t.dim());
        return out;
    }
};

MapPenico map_penico(const CremonaPair& p);

/// Quotient map on V / R_F with descended norm, plus the radical blocks of
/// F(x + r) = F(x) + cross(x, r) + hat(r) written in R_G coordinates.
struct SsPart {
    NormedMap quotient;
    Subspace rf;
    Subspace rg;
    Matrix source_complement;
    Matrix target_complement;
    std::vector<Polynomial> cross;  // variables (xbar, r)
    std::vector<Polynomial> hat;    // variables r
};

/// Throws QuotientIllDefined.
SsPart map_ss_part(const CremonaPair& p);

/// Gradient of a cubic form. Throws DegeneratePolar when the partials are dependent.
QuadraticMap polar_map(const Polynomial& cubic);

enum class EkpVerdict { EkpHomaloidal, HomaloidalNotEkp, NotBidegree22, Degenerate };

std::string verdict_name(EkpVerdict v);

struct EkpResult {
    EkpVerdict verdict = EkpVerdict::Degenerate;
    std::optional<CremonaPair> pair;
    std::string detail;
};

/// Throws BudgetExceeded when the certification does not fit.
EkpResult ekp_check(const Polynomial& cubic, const Options& opts = {});

/// theta^# with F o theta = theta^# o F. Throws NotInStructureGroup, SingularMatrix.
Matrix structure_transporter(const CremonaPair& p, const Matrix& theta);

/// eta with N o theta = eta N. Throws NotInStructureGroup.
Rational structure_character(const Polynomial& n, const Matrix& theta);

/// (x, r) -> (r x^#, N(x)) on n + 1 variables.
struct SpampinatoLift {
    std::vector<Polynomial> forms;

    Vector apply(const Vector& v) const;
};

SpampinatoLift spampinato_lift(const CubicData& d);

}  // namespace cubix
