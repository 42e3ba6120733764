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
#include "cubix/structure.hpp"

using namespace cubix;
using namespace cubix::testing;

namespace {

// span of all products of two vectors of s, plus their products with the basis
Subspace penico_step_oracle(const Algebra& a, const Subspace& s) {
    std::size_t n = a.dim();
    std::vector<Vector> sq, gens;
    auto v = s.vectors();
    for (const auto& x : v)
        for (const auto& y : v) sq.push_back(a.multiply(x, y));
    gens = sq;
    for (const auto& z : sq)
        for (std::size_t i = 0; i < n; ++i) gens.push_back(a.multiply(z, unit_vector(n, i)));
    return Subspace::span(n, gens);
}

}  // namespace

TEST_CASE("radical: dimensions and orthogonality to the trace form") {
    struct Row {
        const char* name;
        std::size_t dim;
    };
    for (Row r : {Row{"C_eps3", 2}, Row{"CxCeps2", 1}, Row{"Cn(3)", 0}, Row{"Sym3", 0}, Row{"M3", 0}}) {
        CAPTURE(r.name);
        CatalogEntry e = make_named(r.name);
        CubicData d = cubic_data(e.algebra);
        Subspace rad = radical(e.algebra, d);
        CHECK(rad.dim() == r.dim);
        for (const auto& v : rad.vectors()) CHECK(is_zero(d.trace_form * v));
        CHECK(is_ideal(e.algebra, rad));
    }
    CatalogEntry c = make_named("C_eps3");
    CHECK(radical(c.algebra, cubic_data(c.algebra)) == Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)}));
}

TEST_CASE("Penico series follow the ideal products") {
    struct Row {
        const char* name;
        std::vector<std::size_t> dims;
    };
    for (const auto& r : {Row{"C_eps3", {2, 1, 0}}, Row{"CxCeps2", {1, 0}}, Row{"Sym3", {0}}}) {
        CAPTURE(r.name);
        CatalogEntry e = make_named(r.name);
        CubicData d = cubic_data(e.algebra);
        PenicoSeries p = penico_series(e.algebra, d);
        CHECK(p.dims() == r.dims);
        for (std::size_t k = 0; k + 1 < p.terms.size(); ++k)
            CHECK(p.terms[k + 1] == penico_step_oracle(e.algebra, p.terms[k]));
        for (const auto& t : p.terms) CHECK(is_ideal(e.algebra, t));
    }
    CatalogEntry c = make_named("C_eps3");
    PenicoSeries p = penico_series(c.algebra, cubic_data(c.algebra));
    CHECK(p.terms[1] == Subspace::span(3, {unit_vector(3, 2)}));
}

TEST_CASE("ideal test") {
    Algebra a = make_named("C_eps3").algebra;
    CHECK(is_ideal(a, Subspace::span(3, {unit_vector(3, 2)})));
    CHECK(is_ideal(a, Subspace(3)));
    CHECK(is_ideal(a, Subspace::whole(3)));
    CHECK_FALSE(is_ideal(a, Subspace::span(3, {unit_vector(3, 0)})));
    CHECK_FALSE(is_ideal(a, Subspace::span(3, {unit_vector(3, 1)})));
}

TEST_CASE("decomposition: quotient data, section and signatures") {
    struct Row {
        const char* name;
        std::pair<std::size_t, std::size_t> sig;
    };
    for (const auto& r : {Row{"C_eps3", {1, 1}}, Row{"CxCeps2", {2, 2}}, Row{"Cn(3)", {3, 3}}, Row{"Cxspin(1)", {3, 3}},
                          Row{"Cxspin(4)", {3, 6}}, Row{"Sym3", {3, 6}}, Row{"M3", {3, 9}}}) {
        CAPTURE(r.name);
        CatalogEntry e = make_named(r.name);
        CubicData d = cubic_data(e.algebra);
        Decomposition dec = decompose(e.algebra, d);
        CHECK(std::make_pair(dec.ss_rank, dec.ss_dim) == r.sig);
        CHECK(ss_signature(e.algebra, d) == r.sig);
        CHECK(dec.ss_dim + dec.radical.dim() == e.algebra.dim());
        CHECK(check_jordan(dec.ss_algebra).holds);
        // N(x) depends only on x mod R
        SampleStream s(41);
        for (int i = 0; i < 5; ++i) {
            Vector x = s.next_vector(e.algebra.dim());
            CHECK(dec.ss_norm.eval(dec.project(x)) == d.norm.eval(x));
            CHECK(dec.ss_adjoint.apply(dec.project(x)) == dec.project(d.adjoint.apply(x)));
            CHECK(dec.ss_trace.eval(dec.project(x)) == d.trace.eval(x));
        }
        REQUIRE(dec.section.has_value());
        const Matrix& sigma = *dec.section;
        std::size_t m = dec.ss_dim;
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                CHECK(e.algebra.multiply(sigma.col(p), sigma.col(q)) == sigma * dec.ss_algebra.table(p, q));
        CHECK(sigma * dec.ss_algebra.unit() == e.algebra.unit());
        CHECK(dec.projector * sigma == Matrix::identity(m));
    }
    CatalogEntry c = make_named("C_eps3");
    Decomposition dec = decompose(c.algebra, cubic_data(c.algebra));
    CHECK(dec.ss_norm == var(1, 0).pow(3));
}

TEST_CASE("isotopes keep the Penico profile and the signature") {
    SampleStream s(42);
    for (const char* name : {"C_eps3", "CxCeps2", "Sym3"}) {
        CAPTURE(name);
        CatalogEntry e = make_named(name);
        CubicData d = cubic_data(e.algebra);
        auto dims = penico_series(e.algebra, d).dims();
        auto sig = ss_signature(e.algebra, d);
        for (int found = 0; found < 5;) {
            Vector u = s.next_vector(e.algebra.dim());
            if (sgn(d.norm.eval(u)) == 0) continue;
            ++found;
            Algebra iso = isotope(e.algebra, d, u);
            CubicData di = cubic_data(iso);
            CHECK(penico_series(iso, di).dims() == dims);
            CHECK(ss_signature(iso, di) == sig);
        }
    }
    CatalogEntry e = make_named("C_eps3");
    CHECK_THROWS_AS(isotope(e.algebra, cubic_data(e.algebra), Vector{0, 1, 0}), Error);
}
