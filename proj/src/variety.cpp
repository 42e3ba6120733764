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

#include "cubix/variety.hpp"

#include <algorithm>
#include <map>

#include "cubix/error.hpp"

namespace cubix {

namespace {

std::size_t xi(std::size_t i) { return 1 + i; }
std::size_t yi(std::size_t n, std::size_t i) { return 1 + n + i; }

}  // namespace

Vector ProjPoint::x() const { return Vector(coords.begin() + 1, coords.begin() + 1 + static_cast<std::ptrdiff_t>(n())); }

Vector ProjPoint::y() const {
    return Vector(coords.begin() + 1 + static_cast<std::ptrdiff_t>(n()), coords.end() - 1);
}

ProjPoint ProjPoint::from_blocks(const Rational& alpha, const Vector& x, const Vector& y, const Rational& beta) {
    require_dim(y.size(), x.size(), "y block");
    ProjPoint p;
    p.coords.reserve(2 * x.size() + 2);
    p.coords.push_back(alpha);
    p.coords.insert(p.coords.end(), x.begin(), x.end());
    p.coords.insert(p.coords.end(), y.begin(), y.end());
    p.coords.push_back(beta);
    return p;
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
    if (p.coords.size() != q.coords.size() || is_zero(p.coords) || is_zero(q.coords)) return false;
    // with a pivot k of p, q = (q_k / p_k) p exactly when every minor through k vanishes
    std::size_t k = 0;
    while (sgn(p.coords[k]) == 0) ++k;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        if (p.coords[k] * q.coords[i] != p.coords[i] * q.coords[k]) return false;
    return true;
}

ProjPoint mu(const QuadraticMap& adjoint, const Polynomial& norm, const Element& x) {
    require_dim(x.size(), adjoint.n(), "point");
    return ProjPoint::from_blocks(1, x, adjoint.apply(x), norm.eval(x));
}

ProjPoint mu(const CubicData& d, const Element& x) { return mu(d.adjoint, d.norm, x); }

ProjPoint zero_point(std::size_t n) { return ProjPoint::from_blocks(1, zeros(n), zeros(n), 0); }

ProjPoint infinity_point(std::size_t n) { return ProjPoint::from_blocks(0, zeros(n), zeros(n), 1); }

bool on_variety(const CubicData& d, const ProjPoint& p, const std::vector<ProjPoint>& boundary) {
    std::size_t n = d.dim();
    if (p.coords.size() != 2 * n + 2 || is_zero(p.coords)) return false;
    const Rational& a = p.alpha();
    if (sgn(a) == 0) {
        if (proj_equal(p, infinity_point(n))) return true;
        return std::any_of(boundary.begin(), boundary.end(), [&](const ProjPoint& b) { return proj_equal(p, b); });
    }
    Vector z = p.x();
    Vector y = p.y();
    Vector zs = d.adjoint.apply(z);
    for (std::size_t i = 0; i < n; ++i)
        if (a * y[i] != zs[i]) return false;
    return a * a * p.beta() == d.norm.eval(z);
}

ProjPoint apply(const Matrix& m, const ProjPoint& p) {
    require_dim(m.cols(), p.coords.size(), "projective map");
    return ProjPoint{m * p.coords};
}

Matrix translation(const CubicData& d, const CremonaPair& p, const Element& x_star) {
    std::size_t n = d.dim();
    require_dim(p.dim(), n, "pair");
    require_dim(x_star.size(), n, "translation vector");
    Matrix l = Matrix::identity(2 * n + 2);
    Vector fx = p.f.apply(x_star);
    Vector bx = p.bf.transpose() * x_star;
    std::size_t beta = 2 * n + 1;
    for (std::size_t i = 0; i < n; ++i) {
        l(xi(i), 0) = x_star[i];
        l(yi(n, i), 0) = fx[i];
        l(beta, yi(n, i)) = bx[i];
        l(beta, xi(i)) = p.n.derivative(i).eval(x_star);
    }
    for (std::size_t k = 0; k < n; ++k) {
        Vector col = p.f.polar(x_star, unit_vector(n, k));
        for (std::size_t i = 0; i < n; ++i) l(yi(n, i), xi(k)) = col[i];
    }
    l(beta, 0) = p.n.eval(x_star);
    return l;
}

ProjPoint CubicCurve::at(const Rational& t) const {
    ProjPoint p;
    Vector tv{t};
    for (const auto& c : param) p.coords.push_back(c.eval(tv));
    return p;
}

ProjPoint CubicCurve::leading() const {
    ProjPoint p;
    for (const auto& c : param) p.coords.push_back(c.coeff(Exponent{3}));
    return p;
}

int CubicCurve::degree() const {
    int deg = -1;
    for (const auto& c : param) deg = std::max(deg, c.degree());
    return deg;
}

std::vector<Rational> CubicCurve::chart_parameters(std::size_t count) const {
    // alpha has at most 3 roots, so this stops after count + 3 tries
    std::vector<Rational> out;
    for (long t = 2; out.size() < count; ++t) {
        Vector tv{Rational(t)};
        if (sgn(param.front().eval(tv)) != 0) out.push_back(tv[0]);
    }
    return out;
}

CubicCurve cubic_through(const CubicData& d, const CremonaPair& p, const Element& x1, const Element& x2,
                         const Element& x3) {
    std::size_t n = d.dim();
    require_dim(x1.size(), n, "x1");
    require_dim(x2.size(), n, "x2");
    require_dim(x3.size(), n, "x3");
    Vector u1 = x1 - x3, u2 = x2 - x3;
    Rational n1 = p.n.eval(u1), n2 = p.n.eval(u2);
    if (sgn(n1) == 0 || sgn(n2) == 0) fail(Errc::NonGenericTriple, "N(x_i - x_3) vanishes");
    Vector a = Rational(1 / n1) * p.f.apply(u1);
    Vector b = Rational(1 / n2) * p.f.apply(u2) - a;
    if (sgn(p.m.eval(b)) == 0) fail(Errc::NonGenericTriple, "M vanishes on the direction of the line");

    std::vector<Polynomial> line;
    Polynomial t = Polynomial::variable(1, 0);
    for (std::size_t i = 0; i < n; ++i) line.push_back(Polynomial::constant(1, a[i]) + b[i] * t);
    std::vector<Polynomial> base;
    base.push_back(p.m.substitute(line));
    for (const auto& g : p.g.forms()) base.push_back(g.substitute(line));
    base.insert(base.end(), line.begin(), line.end());
    base.push_back(Polynomial::constant(1, 1));

    Matrix l = translation(d, p, x3);
    CubicCurve c;
    for (std::size_t r = 0; r < l.rows(); ++r) {
        Polynomial acc(1);
        for (std::size_t k = 0; k < l.cols(); ++k)
            if (sgn(l(r, k)) != 0) acc += l(r, k) * base[k];
        c.param.push_back(std::move(acc));
    }
    if (!proj_equal(c.at(0), mu(d, x1)) || !proj_equal(c.at(1), mu(d, x2)) || !proj_equal(c.leading(), mu(d, x3)))
        fail(Errc::IdentityFailure, "constructed curve misses a target point");
    return c;
}

Polynomial tangent_quartic(const CubicData& d) {
    std::size_t n = d.dim();
    std::size_t vars = 2 * n + 2;
    Polynomial alpha = Polynomial::variable(vars, 0);
    Polynomial beta = Polynomial::variable(vars, vars - 1);
    std::vector<Polynomial> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(d.adjoint[i].shifted(vars, 1));
        ys.push_back(d.adjoint[i].shifted(vars, 1 + n));
    }
    Polynomial txy(vars), tss(vars);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial rowx(vars), rows(vars);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& c = d.trace_form(i, j);
            if (sgn(c) == 0) continue;
            rowx += c * Polynomial::variable(vars, yi(n, j));
            rows += c * ys[j];
        }
        txy += Polynomial::variable(vars, xi(i)) * rowx;
        tss += xs[i] * rows;
    }
    Polynomial nx = d.norm.shifted(vars, 1);
    Polynomial ny = d.norm.shifted(vars, 1 + n);
    Polynomial w = txy - alpha * beta;
    return tss - beta * nx - alpha * ny - Rational(1, 4) * (w * w);
}

Polynomial restrict_to_curve(const Polynomial& q, const CubicCurve& c) {
    require_dim(c.param.size(), q.nvars(), "curve");
    return q.substitute(c.param);
}

Subspace quartic_vertex(const Polynomial& q) {
    std::size_t vars = q.nvars();
    std::map<Exponent, std::size_t> row_of;
    std::vector<Polynomial> partials;
    for (std::size_t l = 0; l < vars; ++l) {
        partials.push_back(q.derivative(l));
        for (const auto& term : partials.back().terms()) row_of.emplace(term.first, row_of.size());
    }
    Matrix m(row_of.size(), vars);
    for (std::size_t l = 0; l < vars; ++l)
        for (const auto& [e, c] : partials[l].terms()) m(row_of.at(e), l) = c;
    return nullspace_auto(m);
}

Subspace radical_vertex(const Subspace& radical) {
    std::size_t n = radical.ambient_dim();
    std::vector<Vector> gens;
    for (const auto& r : radical.vectors()) {
        gens.push_back(ProjPoint::from_blocks(0, r, zeros(n), 0).coords);
        gens.push_back(ProjPoint::from_blocks(0, zeros(n), r, 0).coords);
    }
    return Subspace::span(2 * n + 2, gens);
}

Matrix rho_j(std::size_t n) {
    Matrix m(2 * n + 2, 2 * n + 2);
    m(0, 2 * n + 1) = 1;
    m(2 * n + 1, 0) = 1;
    for (std::size_t i = 0; i < n; ++i) {
        m(xi(i), yi(n, i)) = 1;
        m(yi(n, i), xi(i)) = 1;
    }
    return m;
}

Matrix rho_translation(const CubicData& d, const Element& w) {
    std::size_t n = d.dim();
    require_dim(w.size(), n, "translation vector");
    Matrix m = Matrix::identity(2 * n + 2);
    Vector ws = d.adjoint.apply(w);
    Vector tw = d.trace_form * w;
    Vector tws = d.trace_form * ws;
    std::size_t beta = 2 * n + 1;
    for (std::size_t i = 0; i < n; ++i) {
        m(xi(i), 0) = w[i];
        m(yi(n, i), 0) = ws[i];
        m(beta, yi(n, i)) = tw[i];
        m(beta, xi(i)) = tws[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        Vector col = d.adjoint.polar(unit_vector(n, k), w);
        for (std::size_t i = 0; i < n; ++i) m(yi(n, i), xi(k)) = col[i];
    }
    m(beta, 0) = d.norm.eval(w);
    return m;
}

Matrix rho_structure(const CubicData& d, const CremonaPair& p, const Matrix& g) {
    std::size_t n = d.dim();
    Matrix gs = structure_transporter(p, g);
    Rational eta = structure_character(p.n, g);
    Matrix m(2 * n + 2, 2 * n + 2);
    m(0, 0) = 1;
    m(2 * n + 1, 2 * n + 1) = eta;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            m(xi(i), xi(k)) = g(i, k);
            m(yi(n, i), yi(n, k)) = gs(i, k);
        }
    return m;
}

Rational quartic_multiplier(const Polynomial& q, const Matrix& m) {
    if (q.is_zero()) return 0;
    Polynomial qm = q.substitute(linear_substitution(m));
    const auto& [e, c] = *q.terms().begin();
    Rational s = qm.coeff(e) / c;
    if (sgn(s) == 0 || qm != s * q) return 0;
    return s;
}

ProjPoint project_ss(const Decomposition& dec, const ProjPoint& p) {
    std::size_t n = dec.projector.cols();
    require_dim(p.coords.size(), 2 * n + 2, "point");
    ProjPoint out = ProjPoint::from_blocks(p.alpha(), dec.project(p.x()), dec.project(p.y()), p.beta());
    if (is_zero(out.coords)) fail(Errc::InsideCenter, "point lies in 0 + Rad + Rad + 0");
    return out;
}

}  // namespace cubix
