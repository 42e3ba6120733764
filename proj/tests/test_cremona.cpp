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
#include "cubix/cremona.hpp"
#include "cubix/error.hpp"

using namespace cubix;
using namespace cubix::testing;

namespace {

QuadraticMap p2_involution() { return QuadraticMap({var(3, 1) * var(3, 2), var(3, 0) * var(3, 2), var(3, 0) * var(3, 1)}); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::IdentityFailure;
}

// G(F(x)) = N(x) x, F(G(y)) = M(y) y and M(F(x)) = N(x)^2 evaluated at points.
void check_pair_at_points(const CremonaPair& p, std::uint64_t seed) {
    SampleStream s(seed);
    for (int i = 0; i < 10; ++i) {
        Vector x = s.next_vector(p.dim());
        Vector fx = p.f.apply(x);
        CHECK(p.g.apply(fx) == p.n.eval(x) * x);
        CHECK(p.f.apply(p.g.apply(x)) == p.m.eval(x) * x);
        CHECK(p.m.eval(fx) == p.n.eval(x) * p.n.eval(x));
    }
}

CremonaPair c_eps3_pair() { return adjoint_pair(entry_cubic_data(make_named("C_eps3"))); }

Matrix lower(const Rational& m22, const Rational& m33, const Rational& m21, const Rational& m31, const Rational& m32) {
    Matrix t(3, 3);
    t(0, 0) = m22 * m22 / m33;
    t(1, 0) = m21;
    t(1, 1) = m22;
    t(2, 0) = m31;
    t(2, 1) = m32;
    t(2, 2) = m33;
    return t;
}

}  // namespace

TEST_CASE("certify: the standard involution of P^2") {
    CremonaPair p = certify(p2_involution());
    CHECK(p.n == var(3, 0) * var(3, 1) * var(3, 2));
    CHECK(p.g == p2_involution());
    CHECK(p.m == p.n);
    CHECK(verify_pair(p).all());
    check_pair_at_points(p, 51);
}

TEST_CASE("certify: the adjoint of Sym3 has the determinant as norm") {
    CatalogEntry e = make_named("Sym3");
    CremonaPair p = certify(*e.closed_adjoint);
    CHECK(verify_pair(p).all());
    check_pair_at_points(p, 52);
    // det of the symbolic symmetric matrix, up to the normalising scalar
    std::size_t n = 6;
    std::vector<std::vector<Polynomial>> m = {{var(n, 0), var(n, 5), var(n, 4)},
                                              {var(n, 5), var(n, 1), var(n, 3)},
                                              {var(n, 4), var(n, 3), var(n, 2)}};
    Polynomial det = leibniz_det(m, n);
    CHECK(p.n == Rational(1 / det.leading_coefficient()) * det);
}

TEST_CASE("certify: fake and non-birational maps") {
    SampleStream s(53);
    Matrix l = random_invertible(s, 3);
    Polynomial ell = var(3, 0) + Rational(2) * var(3, 1) - var(3, 2);
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial row(3);
        for (std::size_t j = 0; j < 3; ++j) row += l(i, j) * var(3, j);
        forms.push_back(ell * row);
    }
    CHECK(code_of([&] { certify(QuadraticMap(forms)); }) == Errc::Fake);
    QuadraticMap squares({var(3, 0).pow(2), var(3, 1).pow(2), var(3, 2).pow(2)});
    CHECK(code_of([&] { certify(squares); }) == Errc::NotBirational22);
}

TEST_CASE("bf_solve: gradient of N in terms of F") {
    CHECK(bf_solve(p2_involution(), var(3, 0) * var(3, 1) * var(3, 2)) == Matrix::identity(3));

    CremonaPair c = c_eps3_pair();
    Matrix b = bf_solve(c.f, c.n);
    Matrix want(3, 3);
    want(0, 0) = 3;
    CHECK(b == want);

    // F = l(x) x, N = l^3: dN/dx_i = 3 c_i l^2 = sum_j 3 c_i c_j f_j
    Vector coef{2, -1, 3};
    Polynomial ell = Polynomial::linear(coef);
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < 3; ++i) forms.push_back(ell * var(3, i));
    Matrix bl = bf_solve(QuadraticMap(forms), ell.pow(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(bl(i, j) == 3 * coef[i] * coef[j]);

    CHECK(code_of([&] { bf_solve(p2_involution(), var(3, 0).pow(3)); }) == Errc::NoSolution);
}

TEST_CASE("verify_pair detects broken identities") {
    CremonaPair p = certify(p2_involution());
    CremonaPair bad = p;
    bad.n = Rational(2) * p.n;
    PairCheck c = verify_pair(bad);
    CHECK_FALSE(c.g_of_f);
    CHECK_FALSE(c.all());
    bad = p;
    bad.bf = Rational(2) * p.bf;
    CHECK_FALSE(verify_pair(bad).crucial_f);
    CHECK(verify_pair(bad).g_of_f);
}

TEST_CASE("compose_linear transports the pair") {
    CremonaPair p = certify(p2_involution());
    CremonaPair same = compose_linear(p, Matrix::identity(3), Matrix::identity(3));
    CHECK(same.f == p.f);
    CHECK(same.n == p.n);

    Matrix perm(3, 3);
    perm(0, 1) = perm(1, 2) = perm(2, 0) = 1;
    CremonaPair q = compose_linear(p, perm, perm.transpose());
    CHECK(verify_pair(q).all());
    CHECK(q.n == p.n);

    SampleStream s(54);
    for (const char* name : {"Sym3", "C_eps3"}) {
        CremonaPair base = adjoint_pair(entry_cubic_data(make_named(name)));
        std::size_t n = base.dim();
        for (int trial = 0; trial < 3; ++trial) {
            Matrix l1 = random_invertible(s, n), l2 = random_invertible(s, n);
            CremonaPair t = compose_linear(base, l1, l2);
            CHECK(verify_pair(t).all());
            check_pair_at_points(t, 55 + trial);
            CHECK(t.n.leading_coefficient() == 1);
            SampleStream pts(60);
            Vector x0 = pts.next_vector(n);
            Rational ratio = t.n.eval(x0) / base.n.eval(l2 * x0);
            for (int i = 0; i < 5; ++i) {
                Vector x = pts.next_vector(n);
                CHECK(t.f.apply(x) == l1 * base.f.apply(l2 * x));
                CHECK(t.n.eval(x) == ratio * base.n.eval(l2 * x));
            }
        }
    }
    CHECK(code_of([&] { compose_linear(p, Matrix(3, 3), Matrix::identity(3)); }) == Errc::SingularMatrix);
}

TEST_CASE("algebra_from_map recovers the algebra at its unit") {
    for (const char* name : {"C_eps3", "CxCeps2", "Sym3", "Cxspin(2)"}) {
        CAPTURE(name);
        CatalogEntry e = make_named(name);
        CubicData d = entry_cubic_data(e);
        MapAlgebra m = algebra_from_map(adjoint_pair(d), e.algebra.unit());
        CHECK(m.algebra == e.algebra);
        CHECK(m.cubic.norm == d.norm);
    }
    CremonaPair p = certify(p2_involution());
    MapAlgebra m = algebra_from_map(p, Vector{1, 2, -3});
    CHECK(m.algebra.unit() == Vector{1, 2, -3});
    CHECK(check_jordan(m.algebra).holds);
    CHECK(rank(m.algebra) == 3);
    CHECK(m.cubic.adjoint == p.f.transformed(m.left, m.right));
    CHECK(code_of([&] { algebra_from_map(p, Vector{0, 1, 0}); }) == Errc::NotInvertibleBase);
    MapAlgebra sampled = algebra_from_map(p);
    CHECK(sgn(p.n.eval(sampled.base)) != 0);
}

TEST_CASE("map radical and map Penico series") {
    CremonaPair c = c_eps3_pair();
    CHECK(map_radical(c) == Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)}));
    MapPenico mp = map_penico(c);
    CHECK(mp.dims() == std::vector<std::size_t>{2, 1, 0});
    CHECK(mp.ideal_criterion);
    for (std::size_t k = 0; k < mp.f_terms.size(); ++k) CHECK(mp.f_terms[k].dim() == mp.g_terms[k].dim());

    MapPenico m2 = map_penico(adjoint_pair(entry_cubic_data(make_named("CxCeps2"))));
    CHECK(m2.dims() == std::vector<std::size_t>{1, 0});
    CHECK(m2.ideal_criterion);

    CHECK(map_radical(certify(p2_involution())).dim() == 0);

    // N = l^3 has the hyperplane l = 0 as radical
    Vector coef{1, -2, 5};
    Polynomial ell = Polynomial::linear(coef);
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < 3; ++i) forms.push_back(ell * var(3, i));
    CremonaPair lp{QuadraticMap(forms), QuadraticMap(forms), ell.pow(3), ell.pow(3), Matrix(3, 3), Matrix(3, 3)};
    lp.bf = lp.bg = bf_solve(lp.f, lp.n);
    CHECK(verify_pair(lp).all());
    Subspace rad = map_radical(lp);
    CHECK(rad.dim() == 2);
    for (const auto& v : rad.vectors()) CHECK(dot(coef, v) == 0);
}

TEST_CASE("semisimple part of a map") {
    SsPart ss = map_ss_part(c_eps3_pair());
    CHECK(ss.quotient.f.n() == 1);
    CHECK(ss.quotient.f[0] == var(1, 0).pow(2));
    CHECK(ss.quotient.eta == var(1, 0).pow(3));
    REQUIRE(ss.cross.size() == 2);
    CHECK(ss.cross[0] == -(var(3, 0) * var(3, 1)));
    CHECK(ss.cross[1] == -(var(3, 0) * var(3, 2)));
    REQUIRE(ss.hat.size() == 2);
    CHECK(ss.hat[0].is_zero());
    CHECK(ss.hat[1] == var(2, 0).pow(2));

    SsPart full = map_ss_part(certify(p2_involution()));
    CHECK(full.quotient.f == p2_involution());
    CHECK(full.rf.dim() == 0);
}

TEST_CASE("polar map of a cubic form") {
    CatalogEntry e = make_named("Sym3");
    QuadraticMap f = polar_map(*e.closed_norm);
    SampleStream s(56);
    for (int trial = 0; trial < 5; ++trial) {
        Vector x = s.next_vector(6);
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i) m(i, i) = x[i];
        m(2, 1) = m(1, 2) = x[3];
        m(2, 0) = m(0, 2) = x[4];
        m(1, 0) = m(0, 1) = x[5];
        // cofactor c_ij from 2x2 minors
        auto cof = [&](std::size_t i, std::size_t j) {
            std::size_t r[2], c[2];
            for (std::size_t k = 0, a = 0, b = 0; k < 3; ++k) {
                if (k != i) r[a++] = k;
                if (k != j) c[b++] = k;
            }
            Rational minor = m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
            return (i + j) % 2 ? Rational(-minor) : minor;
        };
        Vector want{cof(0, 0), cof(1, 1), cof(2, 2), 2 * cof(2, 1), 2 * cof(2, 0), 2 * cof(1, 0)};
        CHECK(f.apply(x) == want);
        Vector adj = e.closed_adjoint->apply(x);
        for (std::size_t i = 0; i < 6; ++i) CHECK(f.apply(x)[i] == (i < 3 ? 1 : 2) * adj[i]);
    }
    CHECK(code_of([] { polar_map(var(3, 0).pow(3)); }) == Errc::DegeneratePolar);
    CHECK(code_of([] { polar_map(var(3, 0).pow(2)); }) == Errc::DimensionMismatch);
}

TEST_CASE("EKP verdicts") {
    CHECK(ekp_check(var(3, 0) * var(3, 1) * var(3, 2)).verdict == EkpVerdict::EkpHomaloidal);
    CHECK(ekp_check(*make_named("Sym3").closed_norm).verdict == EkpVerdict::EkpHomaloidal);

    Polynomial reduced = var(4, 0) * (var(4, 1).pow(2) + var(4, 2).pow(2) - var(4, 0) * var(4, 3));
    EkpResult r = ekp_check(reduced);
    CHECK(r.verdict == EkpVerdict::HomaloidalNotEkp);
    REQUIRE(r.pair.has_value());
    CHECK(r.pair->n == var(4, 0).pow(3));
    CHECK(verify_pair(*r.pair).all());

    CHECK(ekp_check(var(3, 0).pow(3)).verdict == EkpVerdict::Degenerate);
    Polynomial fermat = var(3, 0).pow(3) + var(3, 1).pow(3) + var(3, 2).pow(3);
    CHECK(ekp_check(fermat).verdict == EkpVerdict::NotBidegree22);
    CHECK(verdict_name(EkpVerdict::EkpHomaloidal) == "EKP-homaloidal");
    CHECK(verdict_name(EkpVerdict::HomaloidalNotEkp) == "homaloidal-not-EKP");
}

TEST_CASE("structure group of the C[eps]/(eps^3) map") {
    CremonaPair c = c_eps3_pair();
    CHECK(c.f == QuadraticMap({var(3, 0).pow(2), -(var(3, 0) * var(3, 1)), var(3, 1).pow(2) - var(3, 0) * var(3, 2)}));
    SampleStream s(57);
    for (int found = 0; found < 10;) {
        Rational m22 = s.next(), m33 = s.next(), m21 = s.next(), m31 = s.next(), m32 = s.next();
        if (sgn(m22) == 0 || sgn(m33) == 0) continue;
        ++found;
        Matrix theta = lower(m22, m33, m21, m31, m32);
        Matrix want(3, 3);
        want(0, 0) = m22 * m22 * m22 * m22 / (m33 * m33);
        want(1, 0) = -(m22 * m22 * m21) / m33;
        want(1, 1) = m22 * m22 * m22 / m33;
        want(2, 0) = (-(m22 * m22 * m31) + m21 * m21 * m33) / m33;
        want(2, 1) = -(m22 * (-(m22 * m32) + 2 * m21 * m33)) / m33;
        want(2, 2) = m22 * m22;
        Matrix sharp = structure_transporter(c, theta);
        CHECK(sharp == want);
        Rational m11 = m22 * m22 / m33;
        CHECK(structure_character(c.n, theta) == m11 * m11 * m11);
        SampleStream pts(58);
        for (int i = 0; i < 3; ++i) {
            Vector x = pts.next_vector(3);
            CHECK(c.f.apply(theta * x) == sharp * c.f.apply(x));
        }
    }
    Matrix off = lower(2, 3, 5, -1, 7);
    off(0, 0) = 1;
    CHECK(code_of([&] { structure_transporter(c, off); }) == Errc::NotInStructureGroup);
    Matrix upper = Matrix::identity(3);
    upper(0, 1) = 1;
    CHECK(code_of([&] { structure_character(c.n, upper); }) == Errc::NotInStructureGroup);
    CHECK(code_of([&] { structure_transporter(c, upper); }) == Errc::NotInStructureGroup);
    CHECK(code_of([&] { structure_transporter(c, Matrix(3, 3)); }) == Errc::SingularMatrix);
}

TEST_CASE("Spampinato lift squares to a scalar") {
    for (const char* name : {"C_eps3", "Sym3", "Cn(3)"}) {
        CAPTURE(name);
        CubicData d = entry_cubic_data(make_named(name));
        SpampinatoLift j = spampinato_lift(d);
        SampleStream s(59);
        for (int i = 0; i < 5; ++i) {
            Vector v = s.next_vector(d.dim() + 1);
            Vector x(v.begin(), v.end() - 1);
            Rational r = v.back(), nx = d.norm.eval(x);
            CHECK(j.apply(j.apply(v)) == (nx * nx * r * r) * v);
        }
    }
}
