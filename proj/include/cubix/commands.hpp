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

#include "cubix/catalog.hpp"
#include "cubix/json_io.hpp"

namespace cubix {

/// One executed check. `samples` is the number of points or cases it covered.
struct LedgerEntry {
    std::string check;
    bool pass = false;
    std::size_t samples = 0;
};

struct Report {
    std::string command;
    std::string digest;
    Json results = Json::object();
    std::vector<LedgerEntry> ledger;

    void record(std::string check, bool pass, std::size_t samples = 1);
    bool passed() const;

    Json to_json() const;
    std::string to_text() const;
};

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string digest(const std::string& text);

/// An algebra read from the catalog or from a JSON file.
struct AlgebraSource {
    std::string label;
    Algebra algebra;
    std::optional<CatalogEntry> entry;
};

AlgebraSource load_named(const std::string& name);
AlgebraSource load_algebra_text(const std::string& label, const std::string& json_text);

Report cmd_catalog(const Options& opts);
Report cmd_inspect(const AlgebraSource& src, const Options& opts);
Report cmd_roundtrip(const std::string& name, const Options& opts);

Report cmd_cremona_certify(const std::string& json_text, const Options& opts);
Report cmd_cremona_ekp(const std::string& json_text, const Options& opts);

/// Structure of a map: radical, Penico series, semi-simple part, and
/// structure-group membership of theta when given. The map is the adjoint
/// of a catalog entry, or read from JSON and certified first.
struct StructureInput {
    std::optional<std::string> algebra;
    std::optional<std::string> map_json;
    std::optional<std::string> theta_json;
};

Report cmd_cremona_structure(const StructureInput& in, const Options& opts);

Report cmd_variety_check(const std::string& name, std::size_t triples, const Options& opts);

}  // namespace cubix
