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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubix {

enum class Errc {
    DimensionMismatch,
    Underdetermined,
    Inconsistent,
    BudgetExceeded,
    NotRankThree,
    NotInvertible,
    UnknownName,
    NonTerminating,
    NotBirational22,
    Fake,
    NoSolution,
    SingularMatrix,
    NotInStructureGroup,
    NotInvertibleBase,
    NormalizationFailed,
    QuotientIllDefined,
    DegeneratePolar,
    NonGenericTriple,
    InsideCenter,
    ParseError,
    IdentityFailure,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (and the CLI) can tell verdicts apart from faults.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        fail(Errc::DimensionMismatch,
             std::string(what) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
    }
}

}  // namespace cubix
