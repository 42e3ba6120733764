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

#include "doctest.h"
#include "helpers.hpp"

#include "cubix/catalog.hpp"
#include "cubix/error.hpp"
#include "cubix/variety.hpp"

using namespace cubix;
using namespace cubix::testing;

namespace {

struct Setup {
    CatalogEntry entry;
    CubicData d;
    CremonaPair p;
};

Setup setup(const char* name) {
    Setup s{make_named(name), {}, {}};
    s.d = entry_cubic_data(s.entry);
    s.p = adjoint_pair(s.d);
    return s;
}

const char* const kSmall[] = {"Cn(3)", "C_eps3", "CxCeps2", "Cxspin(1)", "Cxspin(2)", "Sym3", "M3"};

// Q evaluated from its definition with the library's T, #, N at numbers only.
Rational quartic_oracle(const CubicData& d, const ProjPoint& p) {
    Vector x = p.x(), y = p.y();
    Rational a = p.alpha(), b = p.beta();
    Rational t = trace_bilinear(d, x, y) - a * b;
    return trace_bilinear(d, adjoint_apply(d, x), adjoint_apply(d, y)) - b * d.norm.eval(x) - a * d.norm.eval(y) -
           t * t / 4;
}

}  // namespace

TEST_CASE("mu: special points and membership") {
    Setup s = setup("Cn(3)");
    CHECK(proj_equal(mu(s.d, zeros(3)), zero_point(3)));
    CHECK(proj_equal(mu(s.d, s.d.unit), ProjPoint::from_blocks(1, s.d.unit, s.d.unit, 1)));
    CHECK(mu(s.d, Vector{1, 2, 3}).coords == Vector{1, 1, 2, 3, 6, 3, 2, 6});
    CHECK(proj_equal(mu(s.d, Vector{1, 2, 3}), mu(s.p.f, s.p.n, Vector{1, 2, 3})));

    for (const char* name : kSmall) {
        CAPTURE(name);
        Setup t = setup(name);
        std::size_t n = t.d.dim();
        SampleStream st(71);
        for (int i = 0; i < 10; ++i) {
            Vector x = st.next_vector(n);
            ProjPoint m = mu(t.d, x);
            CHECK(on_variety(t.d, m));
            ProjPoint scaled = m;
            for (auto& c : scaled.coords) c *= -3;
            CHECK(on_variety(t.d, scaled));
            CHECK(proj_equal(m, scaled));
            ProjPoint bent = m;
            bent.coords[n + 1] += 1;
            CHECK_FALSE(on_variety(t.d, bent));
            CHECK_FALSE(proj_equal(m, bent));
        }
        CHECK(on_variety(t.d, infinity_point(n)));
        ProjPoint stray = infinity_point(n);
        stray.coords[1] = 1;
        CHECK_FALSE(on_variety(t.d, stray));
        CHECK(on_variety(t.d, stray, {stray}));
    }
    CHECK_FALSE(proj_equal(ProjPoint{zeros(8)}, ProjPoint{zeros(8)}));
}

TEST_CASE("translations move mu points") {
    for (const char* name : kSmall) {
        CAPTURE(name);
        Setup t = setup(name);
        std::size_t n = t.d.dim();
        CHECK(translation(t.d, t.p, zeros(n)) == Matrix::identity(2 * n + 2));
        SampleStream st(72);
        for (int k = 0; k < 3; ++k) {
            Vector a = st.next_vector(n), b = st.next_vector(n);
            Matrix la = translation(t.d, t.p, a), lb = translation(t.d, t.p, b);
            Matrix lab = translation(t.d, t.p, a + b);
            for (int i = 0; i < 3; ++i) {
                Vector x = st.next_vector(n);
                CHECK(proj_equal(apply(la, mu(t.d, x)), mu(t.d, x + a)));
                CHECK(proj_equal(apply(la * lb, mu(t.d, x)), apply(lab, mu(t.d, x))));
            }
        }
    }
    Setup c = setup("C_eps3");
    Vector eps{0, 1, 0};
    Matrix l = translation(c.d, c.p, eps);
    SampleStream st(73);
    for (int i = 0; i < 10; ++i) {
        Vector x = st.next_vector(3);
        CHECK(proj_equal(apply(l, mu(c.d, x)), mu(c.d, x + eps)));
    }
}

TEST_CASE("twisted cubics through three points") {
    for (const char* name : kSmall) {
        CAPTURE(name);
        Setup t = setup(name);
        std::size_t n = t.d.dim();
        SampleStream st(74);
        int built = 0;
        for (int trial = 0; trial < 30 && built < 3; ++trial) {
            Vector x1 = st.next_vector(n), x2 = st.next_vector(n), x3 = st.next_vector(n);
            CubicCurve c;
            try {
                c = cubic_through(t.d, t.p, x1, x2, x3);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::NonGenericTriple);
                continue;
            }
            ++built;
            CHECK(c.degree() == 3);
            CHECK(proj_equal(c.at(0), mu(t.d, x1)));
            CHECK(proj_equal(c.at(1), mu(t.d, x2)));
            CHECK(proj_equal(c.leading(), mu(t.d, x3)));
            auto params = c.chart_parameters(5);
            CHECK(params.size() == 5);
            for (const auto& u : params) CHECK(on_variety(t.d, c.at(u)));
            CHECK(restrict_to_curve(tangent_quartic(t.d), c).is_zero());
        }
        CHECK(built == 3);
    }
    Setup s = setup("Cn(3)");
    Vector x1{1, 2, 3}, x2{-2, 1, 4}, zero = zeros(3);
    CHECK_THROWS_AS(cubic_through(s.d, s.p, x1, x1, zero), Error);
    CHECK_THROWS_AS(cubic_through(s.d, s.p, Vector{0, 2, 3}, x2, zero), Error);
    CubicCurve c = cubic_through(s.d, s.p, x1, x2, zero);
    ProjPoint lead = c.leading();
    CHECK(proj_equal(lead, zero_point(3)));
    CHECK(sgn(lead.alpha()) != 0);
    for (std::size_t i = 1; i < lead.coords.size(); ++i) CHECK(is_zero(lead.coords[i]));
}

TEST_CASE("tangent quartic") {
    for (const char* name : kSmall) {
        CAPTURE(name);
        Setup t = setup(name);
        std::size_t n = t.d.dim();
        Polynomial q = tangent_quartic(t.d);
        CHECK(q.is_homogeneous(4));
        CHECK(q.nvars() == 2 * n + 2);
        SampleStream st(75);
        for (int i = 0; i < 10; ++i) {
            Vector x = st.next_vector(n), v = st.next_vector(n);
            CHECK(q.eval(mu(t.d, x).coords) == 0);
            Vector pv = t.d.unit + v;
            Vector ev = t.d.unit + sharp_product(t.d, t.d.unit, v);
            ProjPoint p = ProjPoint::from_blocks(1, pv, ev, 1 + t.d.trace.eval(v));
            CHECK(q.eval(p.coords) == 0);
            ProjPoint r{st.next_vector(2 * n + 2)};
            CHECK(q.eval(r.coords) == quartic_oracle(t.d, r));
        }
        Subspace vertex = quartic_vertex(q);
        Subspace rad = map_radical(t.p);
        CHECK(vertex == radical_vertex(rad));
        CHECK(vertex.dim() == 2 * rad.dim());
    }
    CHECK(quartic_vertex(tangent_quartic(setup("M3").d)).dim() == 0);
    CHECK(quartic_vertex(tangent_quartic(setup("C_eps3").d)).dim() == 4);
    CHECK(quartic_vertex(tangent_quartic(setup("CxCeps2").d)).dim() == 2);
    Setup c = setup("Cn(3)");
    CHECK(tangent_quartic(c.d).eval(Vector{1, 0, 0, 0, 0, 0, 0, 1}) != 0);
}

TEST_CASE("conformal generators preserve the quartic") {
    for (const char* name : kSmall) {
        CAPTURE(name);
        Setup t = setup(name);
        std::size_t n = t.d.dim();
        Polynomial q = tangent_quartic(t.d);
        CHECK(rho_translation(t.d, zeros(n)) == Matrix::identity(2 * n + 2));
        CHECK(quartic_multiplier(q, rho_j(n)) != 0);
        SampleStream st(76);
        Vector w = st.next_vector(n);
        Matrix tw = rho_translation(t.d, w);
        CHECK(quartic_multiplier(q, tw) != 0);
        CHECK(proj_equal(apply(tw, zero_point(n)), mu(t.d, w)));
        for (int i = 0; i < 5; ++i) {
            Vector x = st.next_vector(n);
            CHECK(on_variety(t.d, apply(tw, mu(t.d, x))));
            if (sgn(t.d.norm.eval(x)) != 0) CHECK(proj_equal(apply(rho_j(n), mu(t.d, x)), mu(t.d, inverse(t.d, x))));
        }
    }
    Setup c = setup("C_eps3");
    Matrix g(3, 3);
    g(0, 0) = Rational(4, 3);
    g(1, 0) = 5;
    g(1, 1) = 2;
    g(2, 0) = -1;
    g(2, 1) = 7;
    g(2, 2) = 3;
    Matrix rg = rho_structure(c.d, c.p, g);
    Polynomial q = tangent_quartic(c.d);
    CHECK(quartic_multiplier(q, rg) != 0);
    SampleStream st(77);
    for (int i = 0; i < 5; ++i) CHECK(on_variety(c.d, apply(rg, mu(c.d, st.next_vector(3)))));
    Matrix bad = Matrix::identity(3);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(rho_structure(c.d, c.p, bad), Error);
    Matrix scale = Matrix::identity(8);
    scale(0, 0) = 2;
    CHECK(quartic_multiplier(q, scale) == 0);
}

TEST_CASE("projection to the semisimple part") {
    Setup c = setup("C_eps3");
    Decomposition dec = decompose(c.entry.algebra, c.d);
    SampleStream st(78);
    for (int i = 0; i < 10; ++i) {
        Vector x = st.next_vector(3);
        Rational a = x[0];
        ProjPoint img = project_ss(dec, mu(c.d, x));
        CHECK(proj_equal(img, ProjPoint{Vector{1, a, a * a, a * a * a}}));
    }
    ProjPoint center = ProjPoint::from_blocks(0, Vector{0, 1, 0}, Vector{0, 0, 1}, 0);
    try {
        project_ss(dec, center);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InsideCenter);
    }

    Setup s = setup("Sym3");
    Decomposition ds = decompose(s.entry.algebra, s.d);
    Vector x = st.next_vector(6);
    CHECK(proj_equal(project_ss(ds, mu(s.d, x)), mu(s.d, x)));
}
