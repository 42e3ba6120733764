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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "cubix/catalog.hpp"
#include "cubix/commands.hpp"
#include "cubix/error.hpp"
#include "cubix/json_io.hpp"

using namespace cubix;
using namespace cubix::testing;

namespace {

std::string read_sample(const std::string& name) {
    std::ifstream in(std::string(CUBIX_SAMPLES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::IdentityFailure;
}

}  // namespace

TEST_CASE("JSON round trips") {
    Rational q(-7, 3);
    CHECK(rational_from_json(to_json(q)) == q);
    CHECK(rational_from_json(Json(5)) == 5);
    Vector v{1, Rational(1, 2), -4};
    CHECK(vector_from_json(to_json(v)) == v);
    SampleStream s(81);
    Matrix m = random_matrix(s, 3, 4);
    CHECK(matrix_from_json(to_json(m)) == m);
    Polynomial p = var(3, 0).pow(2) * var(3, 2) - Rational(2, 5) * var(3, 1).pow(3);
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(polynomial_from_json(Json::array(), 4) == Polynomial(4));
    CHECK(code_of([&] { polynomial_from_json(to_json(p), 4); }) == Errc::ParseError);
    Json wrapped = {{"nvars", 3}, {"terms", to_json(p)}};
    CHECK(polynomial_from_json(wrapped) == p);
    for (const char* name : {"C_eps3", "Sym3", "Cxspin(2)"}) {
        CatalogEntry e = make_named(name);
        CHECK(algebra_from_json(to_json(e.algebra)) == e.algebra);
        CHECK(algebra_from_json(parse_json(to_json(e.algebra).dump())) == e.algebra);
    }
    QuadraticMap f = *make_named("Sym3").closed_adjoint;
    CHECK(quadratic_map_from_json(to_json(f)) == f);
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK(code_of([] { parse_json("{\"n\": 3,"); }) == Errc::ParseError);
    CHECK(code_of([] { rational_from_json(Json("1/0")); }) == Errc::ParseError);
    CHECK(code_of([] { rational_from_json(Json("x")); }) == Errc::ParseError);
    CHECK(code_of([] { vector_from_json(Json::object()); }) == Errc::ParseError);
    CHECK(code_of([] { polynomial_from_json(Json::parse(R"([{"exponents": [1, 0]}])")); }) == Errc::ParseError);
    Json a = to_json(make_named("C_eps3").algebra);
    a["table"][0][1] = Json::array({"0", "0", "1"});
    CHECK(code_of([&] { algebra_from_json(a); }) == Errc::ParseError);
    CHECK(code_of([] { load_algebra_text("bad", "[1, 2"); }) == Errc::ParseError);
    CHECK(code_of([] { load_named("Nope"); }) == Errc::UnknownName);
}

TEST_CASE("catalog and inspect reports") {
    Options opts;
    Report cat = cmd_catalog(opts);
    CHECK(cat.passed());
    CHECK(cat.results["entries"].size() == catalog_names().size());

    Report r = cmd_inspect(load_named("C_eps3"), opts);
    CHECK(r.passed());
    CHECK(r.results["rank"] == 3);
    CHECK(r.results["norm"] == "x1^3");
    CHECK(r.results["radical_dim"] == 2);
    CHECK(r.results["penico_dims"] == Json::array({2, 1, 0}));
    CHECK(r.results["ss_norm"] == "x1^3");

    Report again = cmd_inspect(load_named("C_eps3"), opts);
    CHECK(again.to_json().dump() == r.to_json().dump());
    CHECK(again.digest == r.digest);
    CHECK(r.digest.size() == 16);

    AlgebraSource src = load_algebra_text("file", to_json(make_named("CxCeps2").algebra).dump());
    Report f = cmd_inspect(src, opts);
    CHECK(f.passed());
    CHECK(f.results["radical_dim"] == 1);

    Report low = cmd_inspect(load_named("J1(3)"), opts);
    CHECK(low.passed());
    CHECK(low.results["rank"] == 2);
}

TEST_CASE("text rendering lists every ledger line") {
    Report r = cmd_inspect(load_named("Cn(3)"), Options{});
    std::string text = r.to_text();
    for (const auto& l : r.ledger) CHECK(text.find(l.check) != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    Report bad;
    bad.command = "x";
    bad.record("something", false, 3);
    CHECK_FALSE(bad.passed());
    CHECK(bad.to_text().find("FAIL") != std::string::npos);
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("cremona commands") {
    Options opts;
    Report c = cmd_cremona_certify(read_sample("p2_involution.json"), opts);
    CHECK(c.passed());
    CHECK(c.results["verdict"] == "bidegree (2,2)");
    CHECK(polynomial_from_json(c.results["pair"]["N"]) == var(3, 0) * var(3, 1) * var(3, 2));

    Report fake = cmd_cremona_certify(read_sample("fake_map.json"), opts);
    CHECK_FALSE(fake.passed());
    CHECK(fake.results["verdict"] == "Fake");

    Report e = cmd_cremona_ekp(read_sample("reduced_homaloidal.json"), opts);
    CHECK(e.results["verdict"] == "homaloidal-not-EKP");
    Report e2 = cmd_cremona_ekp(read_sample("x1x2x3.json"), opts);
    CHECK(e2.results["verdict"] == "EKP-homaloidal");

    StructureInput in;
    in.algebra = "C_eps3";
    in.theta_json = read_sample("c_eps3_theta.json");
    Report s = cmd_cremona_structure(in, opts);
    CHECK(s.passed());
    in.theta_json = read_sample("c_eps3_not_member.json");
    Report s2 = cmd_cremona_structure(in, opts);
    CHECK(s2.to_json().dump() != s.to_json().dump());

    StructureInput from_map;
    from_map.map_json = read_sample("p2_involution.json");
    CHECK(cmd_cremona_structure(from_map, opts).passed());
}

TEST_CASE("roundtrip and variety check commands") {
    Options opts;
    for (const char* name : {"C_eps3", "CxCeps2", "Sym3"}) {
        CAPTURE(name);
        Report r = cmd_roundtrip(name, opts);
        CHECK(r.passed());
        CHECK(r.results["bases"].size() == 3);
    }
    Report v = cmd_variety_check("C_eps3", 4, opts);
    CHECK(v.passed());
    CHECK(v.results["triples"] == 4);
    CHECK(v.results["vertex_dim"] == 4);
    for (const auto& res : v.results["quartic_residues"]) CHECK(res == "0");

    Options other;
    other.seed = 99;
    Report w = cmd_variety_check("C_eps3", 4, other);
    CHECK(w.passed());
    CHECK(cmd_variety_check("C_eps3", 4, other).digest == w.digest);
}
