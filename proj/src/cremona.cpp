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

#include "cubix/cremona.hpp"

#include <map>

#include "cubix/error.hpp"

namespace cubix {

namespace {

// G o F with the products f_k f_l computed once.
std::vector<Polynomial> compose(const QuadraticMap& g, const QuadraticMap& f) {
    std::size_t n = f.n();
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> products;
    auto product = [&](std::size_t k, std::size_t l) -> const Polynomial& {
        auto key = std::make_pair(std::min(k, l), std::max(k, l));
        auto it = products.find(key);
        if (it == products.end()) it = products.emplace(key, f[key.first] * f[key.second]).first;
        return it->second;
    };
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < g.n(); ++i) {
        Polynomial acc(n);
        for (const auto& [e, c] : g[i].terms()) {
            std::size_t k = 0;
            while (e[k] == 0) ++k;
            std::size_t l = e[k] == 2 ? k : k + 1;
            while (e[l] == 0) ++l;
            acc += c * product(k, l);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool is_scaled_identity(const std::vector<Polynomial>& comp, const Polynomial& s) {
    std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i)
        if (comp[i] != s * Polynomial::variable(n, i)) return false;
    return true;
}

bool crucial_holds(const QuadraticMap& f, const Polynomial& n, const Matrix& b) {
    for (std::size_t i = 0; i < f.n(); ++i) {
        Polynomial rhs(f.n());
        for (std::size_t j = 0; j < f.n(); ++j)
            if (sgn(b(i, j)) != 0) rhs += b(i, j) * f[j];
        if (n.derivative(i) != rhs) return false;
    }
    return true;
}

// Rows: coefficient vectors of the forms of f; solves for L with target = L o f.
Matrix left_factor(const QuadraticMap& f, const std::vector<Polynomial>& target, Errc on_failure) {
    std::size_t n = f.n();
    auto basis = homogeneous_monomials(n, 2);
    Matrix c = f.coefficient_matrix().transpose();  // monomials x forms
    Matrix l(target.size(), n);
    for (std::size_t i = 0; i < target.size(); ++i) {
        SolveResult res = solve_auto(c, coefficients(target[i], basis));
        if (res.status == SolveStatus::Inconsistent)
            fail(on_failure, "form " + std::to_string(i + 1) + " is not in the span of the map");
        l.set_row(i, res.solution);
    }
    return l;
}

Polynomial normalized(const Polynomial& p) { return Rational(1 / p.leading_coefficient()) * p; }

Subspace image_span(const QuadraticMap& f, const Subspace& s) {
    std::size_t n = f.n();
    std::vector<Vector> gens;
    for (const auto& r : s.vectors())
        for (std::size_t i = 0; i < n; ++i) gens.push_back(f.polar(unit_vector(n, i), r));
    return Subspace::span(n, gens);
}

// span{ dF_r(s) : r, s in the subspace }
Subspace self_image(const QuadraticMap& f, const Subspace& s) {
    auto v = s.vectors();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j) gens.push_back(f.polar(v[i], v[j]));
    return Subspace::span(f.n(), gens);
}

}  // namespace

PairCheck verify_pair(const CremonaPair& p) {
    PairCheck c;
    c.g_of_f = is_scaled_identity(compose(p.g, p.f), p.n);
    c.f_of_g = is_scaled_identity(compose(p.f, p.g), p.m);
    c.m_of_f = p.m.substitute(p.f.forms()) == p.n * p.n;
    c.crucial_f = crucial_holds(p.f, p.n, p.bf);
    c.crucial_g = crucial_holds(p.g, p.m, p.bg);
    return c;
}

Matrix bf_solve(const QuadraticMap& f, const Polynomial& n) {
    require_dim(n.nvars(), f.n(), "norm arity");
    std::vector<Polynomial> grad;
    for (std::size_t i = 0; i < f.n(); ++i) grad.push_back(n.derivative(i));
    return left_factor(f, grad, Errc::NoSolution);
}

CremonaPair certify(const QuadraticMap& f, const Options& opts) {
    std::size_t n = f.n();
    if (n == 0) fail(Errc::DimensionMismatch, "empty map");
    auto b2 = homogeneous_monomials(n, 2);
    auto b3 = homogeneous_monomials(n, 3);
    std::size_t unknowns = b2.size() + b3.size();
    std::size_t rows = unknowns + 10;
    check_budget(rows, unknowns, opts.budget, "certify");

    // rows: [ (F(x)_k F(x)_l) | -x_i * cubic monomials(x) ], one system per i
    SampleStream stream = SampleStream(opts.seed).fork(0x43455254);
    Matrix prod(rows, b2.size()), cubes(rows, b3.size());
    std::vector<Vector> points;
    for (std::size_t s = 0; s < rows; ++s) {
        Vector x = stream.next_vector(n);
        Vector y = f.apply(x);
        for (std::size_t q = 0; q < b2.size(); ++q) prod(s, q) = monomial_value(b2[q], y);
        for (std::size_t q = 0; q < b3.size(); ++q) cubes(s, q) = monomial_value(b3[q], x);
        points.push_back(std::move(x));
    }
    Subspace norms = Subspace::whole(b3.size());
    for (std::size_t i = 0; i < n && norms.dim() > 0; ++i) {
        Matrix sys(rows, unknowns);
        for (std::size_t s = 0; s < rows; ++s) {
            for (std::size_t q = 0; q < b2.size(); ++q) sys(s, q) = prod(s, q);
            if (sgn(points[s][i]) != 0)
                for (std::size_t q = 0; q < b3.size(); ++q) sys(s, b2.size() + q) = -points[s][i] * cubes(s, q);
        }
        std::vector<Vector> parts;
        for (const auto& v : nullspace_auto(sys).vectors())
            parts.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(b2.size()), v.end());
        norms = norms.intersect(Subspace::span(b3.size(), parts));
    }
    if (norms.dim() == 0) fail(Errc::NotBirational22, "no cubic N with G(F(x)) = N(x) x");
    if (norms.dim() > 1)
        fail(Errc::Fake, "the inverse is not unique up to scalar (" + std::to_string(norms.dim()) +
                             " independent norms): the map reduces to bidegree (1,1)");

    CremonaPair p;
    p.f = f;
    p.n = normalized(from_coefficients(n, b3, norms.vectors()[0]));
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < n; ++i) {
        Vector rhs(rows);
        for (std::size_t s = 0; s < rows; ++s) rhs[s] = points[s][i] * p.n.eval(points[s]);
        SolveResult res = solve_auto(prod, rhs);
        if (res.status == SolveStatus::Inconsistent) fail(Errc::IdentityFailure, "inverse component unsolvable");
        g.push_back(from_coefficients(n, b2, res.solution));
    }
    p.g = QuadraticMap(std::move(g));
    if (!is_scaled_identity(compose(p.g, p.f), p.n)) fail(Errc::IdentityFailure, "G(F(x)) = N(x) x fails");

    auto fg = compose(p.f, p.g);
    std::size_t k = 0;
    while (k < n && fg[k].is_zero()) ++k;
    if (k == n || !fg[k].divide_by_variable(k, p.m)) fail(Errc::NotBirational22, "F(G(y)) is not M(y) y");
    if (!is_scaled_identity(fg, p.m)) fail(Errc::NotBirational22, "F(G(y)) is not M(y) y");
    p.bf = bf_solve(p.f, p.n);
    p.bg = bf_solve(p.g, p.m);
    if (p.m.substitute(p.f.forms()) != p.n * p.n) fail(Errc::IdentityFailure, "M(F(x)) = N(x)^2 fails");
    return p;
}

CremonaPair adjoint_pair(const CubicData& d) {
    CremonaPair p{d.adjoint, d.adjoint, d.norm, d.norm, d.trace_form, d.trace_form};
    PairCheck c = verify_pair(p);
    if (!c.all()) fail(Errc::IdentityFailure, "adjoint pair identities fail");
    return p;
}

CremonaPair compose_linear(const CremonaPair& p, const Matrix& l1, const Matrix& l2) {
    Matrix l1i = inverse(l1);
    Matrix l2i = inverse(l2);
    CremonaPair q;
    q.f = p.f.transformed(l1, l2);
    QuadraticMap g = p.g.transformed(l2i, l1i);
    Polynomial n = p.n.substitute(linear_substitution(l2));
    Polynomial m = p.m.substitute(linear_substitution(l1i));
    Rational c = n.leading_coefficient();
    q.n = Rational(1 / c) * n;
    q.g = g.scaled(1 / c);
    q.m = Rational(1 / (c * c)) * m;
    q.bf = Rational(1 / c) * (l2.transpose() * p.bf * l1i);
    q.bg = Rational(1 / c) * (l1i.transpose() * p.bg * l2);
    if (!verify_pair(q).all()) fail(Errc::IdentityFailure, "transported pair fails its identities");
    return q;
}

MapAlgebra algebra_from_map(const CremonaPair& p, const Element& base, const Options& opts) {
    std::size_t n = p.dim();
    require_dim(base.size(), n, "base point");
    Rational ne = p.n.eval(base);
    if (sgn(ne) == 0) fail(Errc::NotInvertibleBase, "N vanishes at the base point");

    // P(x)(z) = -dG_{F(x)}(z) + B_G(x, z) x
    auto op = [&](const Vector& x, const Vector& z) {
        return dot(z, p.bg * x) * x - p.g.polar(p.f.apply(x), z);
    };
    Matrix a(n, n);
    for (std::size_t k = 0; k < n; ++k) a.set_col(k, op(base, unit_vector(n, k)));
    Vector w;
    try {
        w = inverse(a) * base;
    } catch (const Error&) {
        fail(Errc::NormalizationFailed, "P(e) is singular");
    }
    MapAlgebra out;
    out.base = base;
    try {
        out.algebra = tabulate(n, base, [&](const Vector& x, const Vector& y) {
            return Rational(1, 2) * (op(x + y, w) - op(x, w) - op(y, w));
        });
    } catch (const Error& e) {
        fail(Errc::NormalizationFailed, e.what());
    }
    if (!check_jordan(out.algebra, opts).holds) fail(Errc::NormalizationFailed, "Jordan identity fails");
    if (rank(out.algebra, opts) != 3) fail(Errc::NormalizationFailed, "recovered algebra is not of rank 3");
    if (cubic_data_cost(n) <= opts.budget) {
        out.cubic = cubic_data(out.algebra, opts);
    } else {
        out.cubic = cubic_data_from_norm(out.algebra, Rational(1 / ne) * p.n);
        if (!check_cubic_identities(out.algebra, out.cubic, 20, opts).all_hold())
            fail(Errc::NormalizationFailed, "descended cubic data fails its identities");
    }
    out.left = left_factor(p.f, out.cubic.adjoint.forms(), Errc::NormalizationFailed);
    out.right = Matrix::identity(n);
    if (out.cubic.adjoint != p.f.transformed(out.left, out.right))
        fail(Errc::NormalizationFailed, "adjoint is not linearly equivalent to F");
    if (rank(out.left) != n) fail(Errc::NormalizationFailed, "witness is singular");
    return out;
}

MapAlgebra algebra_from_map(const CremonaPair& p, const Options& opts) {
    SampleStream stream = SampleStream(opts.seed).fork(0x42415345);
    for (int k = 0; k < 100; ++k) {
        Vector x = stream.next_vector(p.dim());
        if (sgn(p.n.eval(x)) != 0) return algebra_from_map(p, x, opts);
    }
    fail(Errc::NotInvertibleBase, "no sampled point with N != 0");
}

Subspace map_radical(const CremonaPair& p) { return nullspace_auto(third_derivatives(p.n)); }

MapPenico map_penico(const CremonaPair& p) {
    MapPenico s;
    s.f_terms.push_back(map_radical(p));
    s.g_terms.push_back(nullspace_auto(third_derivatives(p.m)));
    s.ideal_criterion = true;
    while (s.f_terms.back().dim() > 0 || s.g_terms.back().dim() > 0) {
        const Subspace& f = s.f_terms.back();
        const Subspace& g = s.g_terms.back();
        if (!g.contains(image_span(p.f, f)) || !f.contains(image_span(p.g, g))) s.ideal_criterion = false;
        Subspace nf = self_image(p.g, g);
        Subspace ng = self_image(p.f, f);
        if (nf.dim() + ng.dim() >= f.dim() + g.dim()) fail(Errc::NonTerminating, "map Penico series stalled");
        s.f_terms.push_back(std::move(nf));
        s.g_terms.push_back(std::move(ng));
    }
    return s;
}

SsPart map_ss_part(const CremonaPair& p) {
    std::size_t n = p.dim();
    SsPart out;
    out.rf = map_radical(p);
    out.rg = nullspace_auto(third_derivatives(p.m));
    Complement src = standard_complement(out.rf);
    Complement dst = standard_complement(out.rg);
    std::size_t m = src.indices.size();
    std::size_t d = out.rf.dim();
    if (dst.indices.size() != m) fail(Errc::QuotientIllDefined, "radicals of F and G differ in dimension");
    out.source_complement = src.basis;
    out.target_complement = dst.basis;

    // x = C xbar + R r in variables (xbar_1..m, r_1..d)
    Matrix lift(n, m + d);
    for (std::size_t k = 0; k < m; ++k) lift.set_col(k, src.basis.col(k));
    auto rv = out.rf.vectors();
    for (std::size_t t = 0; t < d; ++t) lift.set_col(m + t, rv[t]);
    auto sub = linear_substitution(lift);

    auto split = [&](const Polynomial& poly, Polynomial& pure_x, Polynomial& mixed, Polynomial& pure_r) {
        pure_x = Polynomial(m + d);
        mixed = Polynomial(m + d);
        pure_r = Polynomial(m + d);
        for (const auto& [e, c] : poly.terms()) {
            unsigned dx = 0, dr = 0;
            for (std::size_t i = 0; i < m; ++i) dx += e[i];
            for (std::size_t i = m; i < m + d; ++i) dr += e[i];
            (dr == 0 ? pure_x : dx == 0 ? pure_r : mixed).add_term(e, c);
        }
    };
    auto restrict_to = [&](const Polynomial& poly, std::size_t offset, std::size_t count) {
        Polynomial out_poly(count);
        for (const auto& [e, c] : poly.terms())
            out_poly.add_term(Exponent(e.begin() + static_cast<std::ptrdiff_t>(offset),
                                       e.begin() + static_cast<std::ptrdiff_t>(offset + count)),
                              c);
        return out_poly;
    };

    std::vector<Polynomial> lifted;
    for (std::size_t i = 0; i < n; ++i) lifted.push_back(p.f[i].substitute(sub));
    std::vector<Polynomial> fbar;
    for (std::size_t row = 0; row < n; ++row) {
        Polynomial coord(m + d);
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(dst.coords(row, i)) != 0) coord += dst.coords(row, i) * lifted[i];
        Polynomial px, mx, pr;
        split(coord, px, mx, pr);
        if (row < m) {
            if (!mx.is_zero() || !pr.is_zero())
                fail(Errc::QuotientIllDefined, "F(x + r) - F(x) leaves the radical of G");
            fbar.push_back(restrict_to(px, 0, m));
        } else {
            out.cross.push_back(mx);
            out.hat.push_back(restrict_to(pr, m, d));
        }
    }
    Polynomial nl = p.n.substitute(sub);
    Polynomial px, mx, pr;
    split(nl, px, mx, pr);
    if (!mx.is_zero() || !pr.is_zero()) fail(Errc::QuotientIllDefined, "N does not descend to the quotient");
    out.quotient = {QuadraticMap(std::move(fbar)), restrict_to(px, 0, m)};
    return out;
}

QuadraticMap polar_map(const Polynomial& cubic) {
    if (!cubic.is_homogeneous(3) || cubic.is_zero()) fail(Errc::DimensionMismatch, "expected a cubic form");
    std::vector<Polynomial> grad;
    for (std::size_t i = 0; i < cubic.nvars(); ++i) grad.push_back(cubic.derivative(i));
    QuadraticMap f(std::move(grad));
    if (!f.forms_independent()) fail(Errc::DegeneratePolar, "partial derivatives are linearly dependent");
    return f;
}

std::string verdict_name(EkpVerdict v) {
    switch (v) {
        case EkpVerdict::EkpHomaloidal: return "EKP-homaloidal";
        case EkpVerdict::HomaloidalNotEkp: return "homaloidal-not-EKP";
        case EkpVerdict::NotBidegree22: return "not-(2,2)";
        case EkpVerdict::Degenerate: return "degenerate";
    }
    return "unknown";
}

EkpResult ekp_check(const Polynomial& cubic, const Options& opts) {
    EkpResult r;
    QuadraticMap f;
    try {
        f = polar_map(cubic);
    } catch (const Error& e) {
        if (e.code() != Errc::DegeneratePolar) throw;
        r.verdict = EkpVerdict::Degenerate;
        r.detail = e.what();
        return r;
    }
    try {
        r.pair = certify(f, opts);
    } catch (const Error& e) {
        if (e.code() != Errc::NotBirational22 && e.code() != Errc::Fake) throw;
        r.verdict = EkpVerdict::NotBidegree22;
        r.detail = e.what();
        return r;
    }
    if (r.pair->n == normalized(cubic)) {
        r.verdict = EkpVerdict::EkpHomaloidal;
        r.detail = "N is proportional to P";
    } else {
        r.verdict = EkpVerdict::HomaloidalNotEkp;
        r.detail = "N = " + r.pair->n.to_string();
    }
    return r;
}

Matrix structure_transporter(const CremonaPair& p, const Matrix& theta) {
    require_dim(theta.rows(), p.dim(), "theta rows");
    if (rank(theta) != p.dim()) fail(Errc::SingularMatrix, "theta is not invertible");
    return left_factor(p.f, p.f.precompose(theta).forms(), Errc::NotInStructureGroup);
}

Rational structure_character(const Polynomial& n, const Matrix& theta) {
    Polynomial nt = n.substitute(linear_substitution(theta));
    const auto& [e, c] = *n.terms().begin();
    Rational eta = nt.coeff(e) / c;
    if (sgn(eta) == 0 || nt != eta * n) fail(Errc::NotInStructureGroup, "N o theta is not a multiple of N");
    return eta;
}

Vector SpampinatoLift::apply(const Vector& v) const {
    Vector out;
    for (const auto& f : forms) out.push_back(f.eval(v));
    return out;
}

SpampinatoLift spampinato_lift(const CubicData& d) {
    std::size_t n = d.dim();
    SpampinatoLift s;
    Polynomial r = Polynomial::variable(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) s.forms.push_back(r * d.adjoint[i].shifted(n + 1, 0));
    s.forms.push_back(d.norm.shifted(n + 1, 0));
    return s;
}

}  // namespace cubix
