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

// Every fixture in the corpus runs through the full report and must match the
// values recorded next to its matrix.

#include <seifert/errors.hpp>
#include <seifert/report.hpp>

#include <doctest.h>

#include <algorithm>
#include <filesystem>

using namespace seifert;
using nlohmann::json;

namespace {

std::vector<std::filesystem::path> fixture_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(SEIFERT_FIXTURE_DIR))
        if (entry.path().extension() == ".json") out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix matrix_from(const json& rows) {
    IntMatrix M(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j].get<long>();
    return M;
}

void check_bound(const std::optional<BoundReport>& b, const json& expected, const std::string& what) {
    INFO(what);
    REQUIRE(b.has_value());
    CHECK(b->lower.value == expected[0].get<long>());
    CHECK(b->upper.value == expected[1].get<long>());
}

} // namespace

TEST_CASE("fixture corpus") {
    const auto files = fixture_files();
    CHECK(files.size() >= 8);
    for (const auto& path : files) {
        INFO(path.filename().string());
        const std::string text = read_text(path.string());
        const InputDocument doc = parse_input(text);
        const json expected = json::parse(text)["expected"];
        const Report r = run_report(doc, RunOptions{});
        const auto f = SeifertForm::validate(doc.matrix, doc.components);

        CHECK_NOTHROW(reverify(r));
        CHECK(to_json(report_from_json(to_json(r))) == to_json(r));

        if (expected.contains("alexander")) CHECK(r.invariants.alexander.to_string() == expected["alexander"]);
        if (expected.contains("signature")) CHECK(r.invariants.signature == expected["signature"].get<long>());
        if (expected.contains("abs_signature"))
            CHECK(std::labs(r.invariants.signature) == expected["abs_signature"].get<long>());
        if (expected.contains("breadth")) CHECK(r.invariants.breadth == expected["breadth"].get<std::size_t>());
        if (expected.contains("genus")) CHECK(r.genus == expected["genus"].get<std::size_t>());
        if (expected.contains("double_cover")) {
            REQUIRE_FALSE(r.covers.empty());
            CHECK(r.covers[0].degree == 2);
            std::vector<Integer> want;
            for (const auto& x : expected["double_cover"]) want.emplace_back(x.get<long>());
            CHECK(r.covers[0].invariant_factors == want);
        }
        if (expected.contains("cg_bound")) {
            REQUIRE(r.cg_bound.has_value());
            CHECK(r.cg_bound->bound == expected["cg_bound"].get<std::size_t>());
        }
        if (expected.contains("g_alg")) check_bound(r.galg, expected["g_alg"], "g_alg");
        if (expected.contains("taylor_t")) check_bound(r.taylor, expected["taylor_t"], "taylor_t");
        if (expected.contains("u_alg")) check_bound(r.ualg, expected["u_alg"], "u_alg");
        if (expected.contains("stable_defect")) {
            const auto sd = stable_defect_certificate(f);
            CHECK(sd.hypothesis_holds == expected["stable_defect"].get<bool>());
            if (sd.hypothesis_holds) CHECK((sd.certificate && sd.certificate->verified));
        }
        if (expected.contains("certificates"))
            for (const auto& c : expected["certificates"]) {
                const IntMatrix basis = matrix_from(c["basis"]).transpose();
                const auto cert = verify(f, subgroup_kind_from_string(c["kind"]), basis);
                CHECK(cert.verified);
                if (c.contains("restricted")) CHECK(cert.restricted == matrix_from(c["restricted"]));
                if (c.contains("unit"))
                    CHECK(det_laurent(alexander_matrix(cert.restricted)).to_string() == c["unit"].get<std::string>());
            }
    }
}
