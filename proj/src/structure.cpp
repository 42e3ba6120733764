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

#include "cubix/structure.hpp"

#include "cubix/error.hpp"

namespace cubix {

Subspace radical(const Algebra& a, const CubicData& d) {
    require_dim(d.dim(), a.dim(), "cubic data");
    return nullspace_auto(third_derivatives(d.norm));
}

PenicoSeries penico_from(const Algebra& a, const Subspace& start) {
    PenicoSeries s;
    std::size_t n = start.ambient_dim();
    s.terms.push_back(start);
    while (s.terms.back().dim() > 0) {
        auto cur = s.terms.back().vectors();
        std::vector<Vector> squares;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i; j < cur.size(); ++j) squares.push_back(a.multiply(cur[i], cur[j]));
        Subspace sq = Subspace::span(n, squares);
        std::vector<Vector> gens = sq.vectors();
        for (const auto& v : sq.vectors())
            for (std::size_t i = 0; i < n; ++i) gens.push_back(a.multiply(v, unit_vector(n, i)));
        Subspace next = Subspace::span(n, gens);
        if (next.dim() >= s.terms.back().dim()) fail(Errc::NonTerminating, "Penico series stopped decreasing");
        s.terms.push_back(std::move(next));
    }
    return s;
}

PenicoSeries penico_series(const Algebra& a, const CubicData& d) { return penico_from(a, radical(a, d)); }

Vector Decomposition::project(const Vector& x) const { return projector * x; }

namespace {

// Searches for rho with values in the Penico terms so that complement + rho
// is multiplicative and unital, one term at a time.
std::optional<Matrix> find_section(const Algebra& a, const Decomposition& dec, std::size_t budget) {
    std::size_t m = dec.ss_dim;
    Matrix sigma = dec.complement;
    const Algebra& q = dec.ss_algebra;
    auto lift = [&](const Matrix& s, const Vector& coords) { return s * coords; };
    for (std::size_t k = 0; k + 1 < dec.penico.terms.size(); ++k) {
        std::vector<Vector> rk = dec.penico.terms[k].vectors();
        std::vector<Vector> w = dec.penico.terms[k + 1].annihilator().vectors();
        std::size_t unknowns = m * rk.size();
        std::size_t eqs = (m * (m + 1) / 2 + 1) * w.size();
        if (unknowns == 0) continue;
        if (unknowns * eqs > budget) return std::nullopt;
        Matrix lhs(eqs, unknowns);
        Vector rhs(eqs);
        std::size_t row = 0;
        auto emit = [&](const Vector& defect, const std::vector<std::pair<std::size_t, Vector>>& terms) {
            // defect + sum over (slot a, vector v): rho_a contributes through v
            for (const auto& wv : w) {
                rhs[row] = -dot(wv, defect);
                for (const auto& [col, v] : terms) lhs(row, col) += dot(wv, v);
                ++row;
            }
        };
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t s = p; s < m; ++s) {
                Vector sp = sigma.col(p), ss = sigma.col(s);
                const Vector& qps = q.table(p, s);
                Vector defect = a.multiply(sp, ss) - lift(sigma, qps);
                std::vector<std::pair<std::size_t, Vector>> terms;
                for (std::size_t t = 0; t < rk.size(); ++t) {
                    terms.emplace_back(s * rk.size() + t, a.multiply(sp, rk[t]));
                    terms.emplace_back(p * rk.size() + t, a.multiply(rk[t], ss));
                    for (std::size_t c = 0; c < m; ++c)
                        if (sgn(qps[c]) != 0) terms.emplace_back(c * rk.size() + t, -qps[c] * rk[t]);
                }
                emit(defect, terms);
            }
        }
        {
            Vector defect = lift(sigma, q.unit()) - a.unit();
            std::vector<std::pair<std::size_t, Vector>> terms;
            for (std::size_t c = 0; c < m; ++c)
                if (sgn(q.unit()[c]) != 0)
                    for (std::size_t t = 0; t < rk.size(); ++t) terms.emplace_back(c * rk.size() + t, q.unit()[c] * rk[t]);
            emit(defect, terms);
        }
        SolveResult res = solve_auto(lhs, rhs);
        if (res.status == SolveStatus::Inconsistent) return std::nullopt;
        for (std::size_t c = 0; c < m; ++c) {
            Vector col = sigma.col(c);
            for (std::size_t t = 0; t < rk.size(); ++t) col = col + res.solution[c * rk.size() + t] * rk[t];
            sigma.set_col(c, col);
        }
    }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t s = p; s < m; ++s)
            if (a.multiply(sigma.col(p), sigma.col(s)) != lift(sigma, q.table(p, s))) return std::nullopt;
    if (lift(sigma, q.unit()) != a.unit()) return std::nullopt;
    return sigma;
}

}  // namespace

Decomposition decompose(const Algebra& a, const CubicData& d, const Options& opts) {
    std::size_t n = a.dim();
    Decomposition dec;
    dec.radical = radical(a, d);
    dec.penico = penico_from(a, dec.radical);

    Complement comp = standard_complement(dec.radical);
    std::size_t m = comp.indices.size();
    dec.ss_dim = m;
    dec.complement = comp.basis;
    dec.projector = Matrix(m, n);
    for (std::size_t r = 0; r < m; ++r) dec.projector.set_row(r, comp.coords.row(r));

    std::vector<std::vector<Vector>> table(m, std::vector<Vector>(m));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t s = 0; s < m; ++s)
            table[p][s] = dec.project(a.multiply(dec.complement.col(p), dec.complement.col(s)));
    dec.ss_algebra = Algebra(dec.project(a.unit()), table);
    dec.ss_rank = rank(dec.ss_algebra, opts);

    auto sub = linear_substitution(dec.complement);
    dec.ss_norm = d.norm.substitute(sub);
    dec.ss_trace = d.trace.substitute(sub);
    std::vector<Polynomial> adj;
    for (std::size_t r = 0; r < m; ++r) {
        Polynomial f(m);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(dec.projector(r, k)) != 0) f += dec.projector(r, k) * d.adjoint[k].substitute(sub);
        adj.push_back(std::move(f));
    }
    dec.ss_adjoint = QuadraticMap(std::move(adj));
    dec.section = find_section(a, dec, opts.budget);
    return dec;
}

Algebra isotope(const Algebra& a, const CubicData& d, const Element& u) {
    Element unit = inverse(d, u);
    return tabulate(a.dim(), unit, [&](const Vector& x, const Vector& y) { return isotope_product(a, x, y, u); });
}

std::pair<std::size_t, std::size_t> ss_signature(const Algebra& a, const CubicData& d, const Options& opts) {
    Decomposition dec = decompose(a, d, opts);
    return {dec.ss_rank, dec.ss_dim};
}

}  // namespace cubix
