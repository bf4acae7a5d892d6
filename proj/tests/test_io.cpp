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

#include <seifert/errors.hpp>
#include <seifert/io.hpp>
#include <seifert/report.hpp>

#include "known_forms.hpp"

#include <doctest.h>

using namespace seifert;

namespace {

ParseError parse_error(std::string_view text) {
    try {
        parse_input(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("input was accepted");
    return ParseError("", 0, 0);
}

RunOptions quick() {
    RunOptions o;
    o.budget.max_nodes = 200'000;
    o.dmax = 6;
    return o;
}

} // namespace

TEST_CASE("parse: structured documents") {
    auto d = parse_input(R"({"name":"trefoil","components":1,"matrix":[[-1,1],[0,-1]]})");
    CHECK(d.name == "trefoil");
    CHECK(d.components == 1);
    CHECK(d.matrix == forms::trefoil());
    CHECK_FALSE(d.ualg.has_value());

    d = parse_input(R"({"name":"10_103","components":1,"matrix":[[0]],
        "external":{"u_alg":{"value":3,"source":"tables"},"smooth_genus":3}})");
    REQUIRE(d.ualg.has_value());
    CHECK(d.ualg->value == 3);
    CHECK(d.ualg->source == "tables");
    REQUIRE(d.smooth_genus.has_value());
    CHECK(d.smooth_genus->value == 3);

    d = parse_input(R"({"name":"big","components":1,"matrix":[["123456789012345678901234567890"]]})");
    CHECK(d.matrix(0, 0) == Integer("123456789012345678901234567890"));
    d = parse_input(R"({"name":"big","components":1,"matrix":[[123456789012345678901234567890]]})");
    CHECK(d.matrix(0, 0) == Integer("123456789012345678901234567890"));
}

TEST_CASE("parse: matrix literals") {
    const auto d = parse_input("[[-1, 0, -1, 0, 0, -1], [-1, 1, -1, 1, 1, 0], [0, 0, -2, 0, 0, -2],\n"
                               " [1, 0, 1, -2, 0, 1], [0, 0, 0, 1, 1, 0], [0, 0, -1, 0, 0, -2]]");
    CHECK(d.matrix == forms::k12a908());
    CHECK(d.components == 1);
    const auto z = parse_input("[[0]]", 2);
    CHECK(z.components == 2);
    CHECK(z.matrix == IntMatrix{{0}});
    CHECK(parse_input("\xEF\xBB\xBF[[1]]").matrix == IntMatrix{{1}});
    CHECK(parse_input("[]").matrix.rows() == 0);
}

TEST_CASE("parse: errors carry positions") {
    auto e = parse_error("[[1, 2],\n [3]]");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("row") != std::string::npos);

    e = parse_error("[[1, 2],\n [3, 4.5]]");
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);

    e = parse_error(R"({"components":1,"matrix":[[1]]})");
    CHECK(std::string(e.what()).find("name") != std::string::npos);
    CHECK(e.line() == 1);

    e = parse_error("{\"name\":\"x\",\n\"components\":0,\"matrix\":[[1]]}");
    CHECK(e.line() == 2);

    e = parse_error("[[1, 2], [3, 4]");
    CHECK(e.line() == 1);

    e = parse_error(R"([[1, "x"], [0, 1]])");
    CHECK(e.column() == 6);

    parse_error(R"({"name":"x","components":1,"matrix":[[1,2]]})");
    parse_error(R"({"name":7,"components":1,"matrix":[[1]]})");
    parse_error(R"({"name":"x","components":1,"matrix":[[1]],"external":{"u_alg":-1}})");
    parse_error("");
}

TEST_CASE("report: examples") {
    auto r = run_report(parse_input(R"({"name":"L8n2","components":2,"matrix":[[-1,1,0,0,0],[0,0,1,0,0],
        [0,1,0,0,1],[0,0,0,0,0],[0,0,0,-1,0]]})"), quick());
    CHECK(r.galg.determined());
    CHECK(r.galg.upper.value == 0);
    CHECK_FALSE(r.taylor.has_value());
    CHECK(r.covers.size() == 1);

    InputDocument ex{"example", 1, forms::slice_r2_six(), std::nullopt, std::nullopt};
    RunOptions o = quick();
    o.dmax = 12;
    r = run_report(ex, o);
    CHECK(r.galg.lower.value == 3);
    CHECK(r.galg.upper.value == 3);
    REQUIRE(r.taylor.has_value());
    CHECK(r.taylor->upper.value == 0);
    REQUIRE(r.cg_bound.has_value());
    CHECK(r.cg_bound->bound == 3);

    InputDocument k{"10_103", 1, forms::k10_103(), ExternalValue{3, "tables"}, std::nullopt};
    r = run_report(k, quick());
    CHECK(r.galg.determined());
    CHECK(r.galg.upper.value == 2);
    CHECK(r.taylor->lower.value == 1);
    CHECK(r.taylor->upper.value == 1);
    REQUIRE(r.ualg.has_value());
    CHECK(r.ualg->lower.value == 3);
    CHECK(r.ualg->upper.value == 3);
    for (std::size_t i = 1; i < r.certificates.size(); ++i)
        CHECK(r.certificates[i - 1].basis.cols() >= r.certificates[i].basis.cols());

    CHECK_THROWS_AS(run_report(InputDocument{"bad", 1, IntMatrix{{0, 2}, {0, 0}}, {}, {}}, quick()), ValidationError);
}

TEST_CASE("report: json round trip and determinism") {
    for (const IntMatrix& M : {forms::trefoil(), forms::k12a908(), forms::theta()}) {
        const InputDocument doc{"m", 1, M, std::nullopt, std::nullopt};
        const Report r = run_report(doc, quick());
        const nlohmann::json j = to_json(r);
        CHECK(to_json(report_from_json(j)) == j);
        CHECK(to_json(report_from_json(nlohmann::json::parse(emit(r)))) == j);
        CHECK(emit(run_report(doc, quick())) == emit(r));
        CHECK_NOTHROW(reverify(report_from_json(j)));
    }
}

TEST_CASE("report: formats") {
    const Report r = run_report(InputDocument{"trefoil", 1, forms::trefoil(), {}, {}}, quick());
    const std::string text = emit(r, Format::Text);
    CHECK(text.find("t - 1 + t^-1") != std::string::npos);
    const std::string json = emit(r);
    CHECK(nlohmann::json::parse(json)["invariants"]["alexander"]["text"] == "t - 1 + t^-1");
    CHECK(json == emit(r, Format::Json));
    CHECK(format_from_string("text") == Format::Text);
    CHECK_THROWS(format_from_string("xml"));
    CHECK(group_string({3}) == "Z/3");
    CHECK(group_string({}) == "0");
}

TEST_CASE("report: tampered certificates are caught") {
    const Report r = run_report(InputDocument{"k", 1, forms::k12a908(), {}, {}}, quick());
    nlohmann::json j = to_json(r);
    REQUIRE_FALSE(j["certificates"].empty());
    j["input"]["matrix"][0][0] = 5;
    CHECK_THROWS_AS(reverify(report_from_json(j)), InternalConsistencyError);
}
