/*
   Copyright 2026 The seifert-forms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <seifert/blanchfield.hpp>
#include <seifert/io.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seifert {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Json, Text };
Format format_from_string(const std::string& s);

struct RunOptions {
    SearchBudget budget;
    long dmax = 12;  // largest branched-cover degree reported
};

struct CertificateRecord {
    Quantity quantity = Quantity::AlgebraicGenus;
    SubgroupKind kind = SubgroupKind::AlexanderTrivial;
    std::size_t stabilizations = 0;  // zero-vector stabilizations of the input matrix
    IntMatrix basis;
    IntMatrix restricted;
};

struct W4Record {
    IntMatrix at_one;
    bool odd = false, indefinite = false, unimodular = false;
    bool certified = false;
    std::size_t size() const noexcept { return at_one.rows(); }
};

struct Report {
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    SearchBudget budget;
    long dmax = 12;

    InputDocument input;
    std::size_t genus = 0;
    InvariantSet invariants;
    std::vector<CoverHomology> covers;  // presentations are not serialized
    std::optional<CoverGenusBound> cg_bound;

    BoundReport galg;  // bound certificates are moved to `certificates`
    std::optional<BoundReport> taylor;
    std::optional<BoundReport> ualg;
    std::optional<W4Record> w4;
    std::string w4_failure;

    // rank descending, then lexicographic in the basis
    std::vector<CertificateRecord> certificates;
};

// validation errors propagate; a certificate that fails re-verification
// against the echoed matrix raises InternalConsistencyError
Report run_report(const InputDocument& doc, const RunOptions& options);

// re-verify every certificate of the report against its input matrix
void reverify(const Report& r);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string emit(const Report& r, Format format = Format::Json);

// shared by the CLI; integers that do not fit in 64 bits become decimal strings
nlohmann::json int_json(const Integer& x);
nlohmann::json to_json(const IntMatrix& M);
nlohmann::json columns_json(const IntMatrix& M);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const Bound& b);
nlohmann::json to_json(const BoundReport& b);
std::string group_string(const std::vector<Integer>& invariant_factors);

} // namespace seifert
