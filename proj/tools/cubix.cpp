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
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cubix/commands.hpp"
#include "cubix/error.hpp"

using namespace cubix;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with rank-3 Jordan algebras, their adjoint Cremona maps and twisted-cubic varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    bool as_json = false;
    std::string in_file;
    app.add_option("--seed", opts.seed, "seed of the deterministic sample stream")->capture_default_str();
    app.add_option("--budget", opts.budget, "cap on rows x unknowns of dense solves")->capture_default_str();
    app.add_flag("--json", as_json, "print the report as one JSON line");
    app.add_option("--in", in_file, "input JSON file");

    auto* catalog = app.add_subcommand("catalog", "list the catalog");

    std::string name;
    auto* inspect = app.add_subcommand("inspect", "rank, cubic data and decomposition of an algebra");
    inspect->add_option("name", name, "catalog name (or use --in)");

    std::string rt_name;
    auto* roundtrip = app.add_subcommand("roundtrip", "algebra -> adjoint pair -> algebra");
    roundtrip->add_option("name", rt_name, "catalog name")->required();

    auto* cremona = app.add_subcommand("cremona", "quadro-quadric Cremona maps");
    cremona->require_subcommand(1);
    auto* certify = cremona->add_subcommand("certify", "certify a quadratic map (--in map.json)");
    auto* ekp = cremona->add_subcommand("ekp", "homaloidal check of a cubic form (--in cubic.json)");
    std::string st_algebra, theta_file;
    auto* structure = cremona->add_subcommand("structure", "radical, Penico series and semi-simple part of a map");
    structure->add_option("--algebra", st_algebra, "use the adjoint map of a catalog entry");
    structure->add_option("--theta", theta_file, "JSON matrix to test for structure-group membership");

    auto* variety = app.add_subcommand("variety", "the twisted-cubic variety of an algebra");
    variety->require_subcommand(1);
    std::string v_algebra;
    std::size_t triples = 10;
    auto* vcheck = variety->add_subcommand("check", "curves through random triples and the tangent quartic");
    vcheck->add_option("--algebra", v_algebra, "catalog name")->required();
    vcheck->add_option("--triples", triples, "number of random triples")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        auto need_in = [&](const char* what) {
            if (in_file.empty()) fail(Errc::ParseError, std::string(what) + " needs --in FILE");
            return read_file(in_file);
        };
        Report report;
        if (catalog->parsed()) {
            report = cmd_catalog(opts);
        } else if (inspect->parsed()) {
            if (name.empty() == in_file.empty()) fail(Errc::ParseError, "inspect takes a catalog name or --in FILE");
            report = cmd_inspect(name.empty() ? load_algebra_text(in_file, read_file(in_file)) : load_named(name), opts);
        } else if (roundtrip->parsed()) {
            report = cmd_roundtrip(rt_name, opts);
        } else if (certify->parsed()) {
            report = cmd_cremona_certify(need_in("cremona certify"), opts);
        } else if (ekp->parsed()) {
            report = cmd_cremona_ekp(need_in("cremona ekp"), opts);
        } else if (structure->parsed()) {
            StructureInput si;
            if (!st_algebra.empty()) si.algebra = st_algebra;
            if (!in_file.empty()) si.map_json = read_file(in_file);
            if (!theta_file.empty()) si.theta_json = read_file(theta_file);
            report = cmd_cremona_structure(si, opts);
        } else if (vcheck->parsed()) {
            report = cmd_variety_check(v_algebra, triples, opts);
        }
        if (as_json)
            std::cout << report.to_json().dump() << "\n";
        else
            std::cout << report.to_text();
        return report.passed() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
    }
    return 2;
}
