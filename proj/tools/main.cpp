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

// Command-line front end. Exit codes: 0 success, 1 input error,
// 2 internal-consistency failure.

#include <seifert/report.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace seifert;
using json = nlohmann::json;

namespace {

struct Common {
    std::string file = "-";
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::uint64_t seed = SearchBudget{}.seed;
    std::optional<long> ualg;
    std::string format = "json";
    long dmax = 12;
    std::size_t components = 1;

    RunOptions options() const {
        RunOptions o;
        o.budget.max_nodes = budget;
        o.budget.seed = seed;
        o.dmax = dmax;
        return o;
    }
    InputDocument document() const {
        InputDocument doc = parse_input(read_text(file), components);
        if (ualg) doc.ualg = ExternalValue{*ualg, "command line"};
        return doc;
    }
    bool text() const { return format == "text"; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("file", c.file, "input document, '-' for stdin")->capture_default_str();
    sub->add_option("--budget", c.budget, "search node budget")->capture_default_str();
    sub->add_option("--seed", c.seed, "seed of the randomized search layer")->capture_default_str();
    sub->add_option("--ualg", c.ualg, "externally known algebraic unknotting number");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--dmax", c.dmax, "largest branched-cover degree")->check(CLI::Range(2L, 64L))->capture_default_str();
    sub->add_option("--components", c.components, "component count for a bare matrix literal")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_invariants(const Common& c) {
    const InputDocument doc = c.document();
    const SeifertForm f = SeifertForm::validate(doc.matrix, doc.components);
    std::vector<CoverHomology> covers;
    const long dmax = f.is_knot() ? c.dmax : 2;
    for (long d = 2; d <= dmax; ++d) covers.push_back(homology_structure(f, d));
    const InvariantSet inv = compute_invariants(f, covers.front().rank);
    std::optional<CoverGenusBound> cg;
    if (f.is_knot()) cg = cg_genus_lower_bound(f, c.dmax);
    if (c.text()) {
        std::cout << "genus " << f.genus() << ", " << f.components() << " component(s)\n"
                  << "Alexander polynomial: " << inv.alexander.to_string() << "\n"
                  << "signature " << inv.signature << ", nullity " << inv.nullity << ", breadth " << inv.breadth << "\n"
                  << "classical lower bound for 2 g_alg: " << inv.lower_bound_twice_galg << "\n";
        for (const auto& h : covers)
            std::cout << "d = " << h.degree << ": " << group_string(h.invariant_factors) << "  (r_" << h.degree
                      << " = " << h.rank << ")\n";
        if (cg) std::cout << "branched-cover genus bound: " << cg->bound << "\n";
        return 0;
    }
    json cj = json::array();
    for (const auto& h : covers) {
        json factors = json::array();
        for (const auto& a : h.invariant_factors) factors.push_back(int_json(a));
        cj.push_back({{"degree", h.degree}, {"invariant_factors", factors}, {"rank", h.rank}});
    }
    print({{"genus", f.genus()},
           {"components", f.components()},
           {"alexander", to_json(inv.alexander)},
           {"signature", inv.signature},
           {"nullity", inv.nullity},
           {"breadth", inv.breadth},
           {"lower_bound_twice_galg", inv.lower_bound_twice_galg},
           {"covers", cj},
           {"cg_bound", cg ? json(cg->bound) : json(nullptr)}});
    return 0;
}

int cmd_bounds(const Common& c) {
    const Report r = run_report(c.document(), c.options());
    if (c.text()) {
        std::string s = emit(r, Format::Text);
        std::cout << s.substr(s.find("g_alg in"));
        return 0;
    }
    const json j = to_json(r);
    print({{"bounds", j["bounds"]}, {"ualg_certificate", j["ualg_certificate"]}, {"certificates", j["certificates"]}});
    return 0;
}

int cmd_certify(const Common& c, const std::string& basis_text, const std::string& kind) {
    const InputDocument doc = c.document();
    const SeifertForm f = SeifertForm::validate(doc.matrix, doc.components);
    // one inner array per basis vector
    json vecs;
    try {
        vecs = json::parse(basis_text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed --basis literal", 1, e.byte);
    }
    if (!vecs.is_array()) throw ParseError("--basis must be an array of vectors", 1, 1);
    IntMatrix basis(f.dim(), vecs.size());
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        if (!vecs[k].is_array() || vecs[k].size() != f.dim())
            throw ParseError("basis vector " + std::to_string(k + 1) + " must have " + std::to_string(f.dim()) +
                                 " integer entries",
                             1, 1);
        for (std::size_t i = 0; i < f.dim(); ++i) {
            if (!vecs[k][i].is_number_integer()) throw ParseError("non-integer basis entry", 1, 1);
            basis(i, k) = Integer(vecs[k][i].dump());
        }
    }
    const auto cert = verify(f, subgroup_kind_from_string(kind), basis);
    if (c.text()) {
        std::cout << kind << " rank " << cert.rank() << ": " << (cert.verified ? "verified" : "rejected")
                  << (cert.reason.empty() ? "" : " (" + cert.reason + ")") << "\n"
                  << "restricted " << to_string(cert.restricted) << "\n";
    } else {
        print({{"kind", kind},
               {"rank", cert.rank()},
               {"verified", cert.verified},
               {"reason", cert.reason},
               {"restricted", to_json(cert.restricted)}});
    }
    return cert.verified ? 0 : 1;
}

json laurent_matrix_json(const LaurentMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

int cmd_blanchfield(const Common& c) {
    const InputDocument doc = c.document();
    const SeifertForm f = SeifertForm::validate(doc.matrix, doc.components);
    const ShapedForm shaped = to_block_form(f);
    const ShapedForm odd = make_block_odd(shaped.matrix);
    const HermitianLaurentMatrix V = blanchfield_matrix(odd.matrix);
    std::optional<std::size_t> ext;
    if (doc.ualg) ext = static_cast<std::size_t>(doc.ualg->value);
    const BoundReport galg = galg_bounds(f, c.options().budget, ext);
    const UalgBounds u = ualg_bounds(f, galg, ext);
    if (c.text()) {
        std::cout << "block shape " << to_string(odd.matrix) << "\n"
                  << "transform " << to_string(shaped.transform * odd.transform) << "\n"
                  << "Blanchfield matrix " << laurent_matrix_json(V.matrix()).dump() << "\n";
        if (u.certificate) {
            const auto& w = *u.certificate;
            std::cout << "W4 " << laurent_matrix_json(w.W4.matrix()).dump() << "\n"
                      << "W4(1) " << to_string(w.W4_at_1) << ": " << (w.certified() ? "certified" : "not certified")
                      << ", u_alg <= " << w.certified_bound() << "\n";
        } else {
            std::cout << "no W4 reduction: " << u.reduction_failure << "\n";
        }
        return 0;
    }
    json red = nullptr;
    if (u.certificate) {
        const auto& w = *u.certificate;
        red = {{"w4", laurent_matrix_json(w.W4.matrix())},
               {"w4_at_1", to_json(w.W4_at_1)},
               {"det_T", w.det_T.to_string()},
               {"det_W3", w.det_W3.to_string()},
               {"odd", w.odd},
               {"indefinite", w.indefinite},
               {"unimodular", w.unimodular},
               {"certified", w.certified()},
               {"certified_bound", w.certified_bound()}};
    }
    print({{"shaped", to_json(odd.matrix)},
           {"transform", to_json(shaped.transform * odd.transform)},
           {"blanchfield_matrix", laurent_matrix_json(V.matrix())},
           {"reduction", red},
           {"reduction_failure", u.reduction_failure},
           {"u_alg", to_json(u.report)}});
    return 0;
}

int cmd_stable(const Common& c) {
    const InputDocument doc = c.document();
    const SeifertForm f = SeifertForm::validate(doc.matrix, doc.components);
    json j;
    try {
        const StableDefectResult s = stable_defect_certificate(f);
        auto vec = [](const std::vector<Integer>& v) {
            json a = json::array();
            for (const auto& x : v) a.push_back(x.get_si());
            return a;
        };
        j = {{"hypothesis_holds", s.hypothesis_holds}, {"status", s.hypothesis_holds ? "found" : "hypothesis-fails"}};
        if (s.certificate) {
            j["copies"] = s.copies;
            j["v1"] = vec(s.v1);
            j["v2"] = vec(s.v2);
            j["w1"] = vec(s.w1);
            j["w2"] = vec(s.w2);
            j["certificate"] = {{"basis", columns_json(s.certificate->basis)},
                                {"restricted", to_json(s.certificate->restricted)},
                                {"verified", s.certificate->verified}};
        }
    } catch (const BudgetExhausted&) {
        j = {{"hypothesis_holds", true}, {"status", "budget-exhausted"}};
    }
    if (c.text()) {
        std::cout << "hypothesis " << (j["hypothesis_holds"].get<bool>() ? "holds" : "fails") << ", "
                  << j["status"].get<std::string>() << "\n";
        if (j.contains("certificate"))
            std::cout << "rank-2 certificate in " << j["copies"] << " copies: basis " << j["certificate"]["basis"].dump()
                      << ", restricted " << j["certificate"]["restricted"].dump() << "\n";
        return 0;
    }
    print(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert form invariants, certificates and genus bounds"};
    app.require_subcommand(1);
    Common c;
    std::string basis, kind = "alexander-trivial";
    auto* inv = app.add_subcommand("invariants", "Alexander polynomial, signature, nullity, branched covers");
    auto* bnd = app.add_subcommand("bounds", "bounds for g_alg, Taylor's invariant and u_alg");
    auto* cer = app.add_subcommand("certify", "verify a user-supplied subgroup basis");
    auto* bla = app.add_subcommand("blanchfield", "block shape, Blanchfield matrix and the W4 reduction");
    auto* sta = app.add_subcommand("stable", "rank-2 certificate after direct sums with copies of the form");
    auto* rep = app.add_subcommand("report", "full report");
    for (auto* s : {inv, bnd, cer, bla, sta, rep}) add_common(s, c);
    cer->add_option("--basis", basis, "basis vectors as [[..],[..]]")->required();
    cer->add_option("--kind", kind, "alexander-trivial, isotropic or metabolizer")
        ->check(CLI::IsMember({"alexander-trivial", "isotropic", "metabolizer"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*inv) return cmd_invariants(c);
        if (*bnd) return cmd_bounds(c);
        if (*cer) return cmd_certify(c, basis, kind);
        if (*bla) return cmd_blanchfield(c);
        if (*sta) return cmd_stable(c);
        std::cout << emit(run_report(c.document(), c.options()), format_from_string(c.format));
        return 0;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
