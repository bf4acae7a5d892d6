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

#include <seifert/report.hpp>

#include <algorithm>
#include <sstream>

namespace seifert {

using json = nlohmann::json;

Format format_from_string(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "text") return Format::Text;
    throw ContractError("unknown format '" + s + "'");
}

namespace {

Integer int_from(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

IntMatrix matrix_from(const json& j) {
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j2 = 0; j2 < cols; ++j2) M(i, j2) = int_from(j[i][j2]);
    return M;
}

IntMatrix columns_from(const json& j, std::size_t dim) {
    IntMatrix M(dim, j.size());
    for (std::size_t c = 0; c < j.size(); ++c)
        for (std::size_t i = 0; i < dim; ++i) M(i, c) = int_from(j[c][i]);
    return M;
}

LaurentPoly laurent_from(const json& j) {
    std::vector<Integer> c;
    for (const auto& x : j.at("coefficients")) c.push_back(int_from(x));
    return LaurentPoly(j.at("low").get<long>(), std::move(c));
}

Bound bound_from(const json& j) {
    return {j.at("value").get<long>(), j.at("provenance").get<std::string>(), j.at("certified").get<bool>()};
}

BoundReport bound_report_from(const json& j, Quantity q) {
    BoundReport b;
    b.quantity = q;
    b.lower = bound_from(j.at("lower"));
    b.upper = bound_from(j.at("upper"));
    b.budget_exhausted = j.at("budget_exhausted").get<bool>();
    return b;
}

json external_json(const std::optional<ExternalValue>& e) {
    if (!e) return nullptr;
    return {{"value", e->value}, {"source", e->source}};
}

std::optional<ExternalValue> external_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return ExternalValue{j.at("value").get<long>(), j.at("source").get<std::string>()};
}

bool record_less(const CertificateRecord& a, const CertificateRecord& b) {
    if (a.basis.cols() != b.basis.cols()) return a.basis.cols() > b.basis.cols();
    if (basis_less(a.basis, b.basis)) return true;
    if (basis_less(b.basis, a.basis)) return false;
    return static_cast<int>(a.quantity) < static_cast<int>(b.quantity);
}

void collect(Report& r, BoundReport& b) {
    for (auto& c : b.certificates)
        if (c.certificate.rank() > 0)
            r.certificates.push_back({b.quantity, c.certificate.kind, c.stabilizations, c.certificate.basis,
                                      c.certificate.restricted});
    b.certificates.clear();
}

std::string bound_line(const BoundReport& b) {
    std::ostringstream os;
    os << to_string(b.quantity) << " in [" << b.lower.value << ", " << b.upper.value << "]"
       << (b.determined() ? "  determined" : "") << (b.budget_exhausted ? "  (search budget exhausted)" : "") << "\n"
       << "  lower " << b.lower.value << ": " << b.lower.provenance << "\n"
       << "  upper " << b.upper.value << ": " << b.upper.provenance << (b.upper.certified ? "" : " [uncertified]")
       << "\n";
    return os.str();
}

} // namespace

json int_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json to_json(const IntMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(int_json(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json columns_json(const IntMatrix& M) { return to_json(M.transpose()); }

json to_json(const LaurentPoly& p) {
    json c = json::array();
    for (const auto& x : p.coefficients()) c.push_back(int_json(x));
    return {{"text", p.to_string()}, {"low", p.low()}, {"coefficients", c}};
}

json to_json(const Bound& b) { return {{"value", b.value}, {"provenance", b.provenance}, {"certified", b.certified}}; }

json to_json(const BoundReport& b) {
    return {{"lower", to_json(b.lower)},
            {"upper", to_json(b.upper)},
            {"determined", b.determined()},
            {"budget_exhausted", b.budget_exhausted}};
}

std::string group_string(const std::vector<Integer>& factors) {
    if (factors.empty()) return "0";
    std::string s;
    for (const auto& a : factors) {
        if (!s.empty()) s += " + ";
        s += a == 0 ? std::string("Z") : "Z/" + a.get_str();
    }
    return s;
}

Report run_report(const InputDocument& doc, const RunOptions& options) {
    const SeifertForm f = SeifertForm::validate(doc.matrix, doc.components);
    Report r;
    r.seed = options.budget.seed;
    r.budget = options.budget;
    r.dmax = options.dmax;
    r.input = doc;
    r.genus = f.genus();

    const long dmax = f.is_knot() ? std::max(2L, options.dmax) : 2;
    for (long d = 2; d <= dmax; ++d) r.covers.push_back(homology_structure(f, d));
    r.invariants = compute_invariants(f, r.covers.front().rank);
    if (f.is_knot()) r.cg_bound = cg_genus_lower_bound(f, options.dmax);

    std::optional<std::size_t> ext;
    if (doc.ualg) ext = static_cast<std::size_t>(doc.ualg->value);
    r.galg = galg_bounds(f, options.budget, ext);
    if (f.is_knot()) {
        r.taylor = taylor_bounds(f, options.budget);
        auto u = ualg_bounds(f, r.galg, ext);
        r.ualg = u.report;
        r.w4_failure = u.reduction_failure;
        if (u.certificate)
            r.w4 = W4Record{u.certificate->W4_at_1, u.certificate->odd, u.certificate->indefinite,
                            u.certificate->unimodular, u.certificate->certified()};
        collect(r, *r.ualg);
        collect(r, *r.taylor);
    }
    collect(r, r.galg);
    std::sort(r.certificates.begin(), r.certificates.end(), record_less);
    reverify(r);
    return r;
}

void reverify(const Report& r) {
    const SeifertForm f = SeifertForm::validate(r.input.matrix, r.input.components);
    for (const auto& c : r.certificates) {
        const SeifertForm amb = stabilize_zero(f, c.stabilizations);
        const auto check = verify(amb, c.kind, c.basis);
        if (!check.verified)
            throw InternalConsistencyError(std::string(to_string(c.kind)) + " certificate fails re-verification: " +
                                           check.reason);
        if (check.restricted != c.restricted)
            throw InternalConsistencyError("restricted matrix of a certificate does not match its basis");
    }
}

json to_json(const Report& r) {
    json j;
    j["tool"] = {{"name", "seifert"}, {"version", r.version}};
    j["seed"] = r.seed;
    j["budget"] = {{"coefficient_cap", r.budget.coefficient_cap},
                   {"stabilization_depth", r.budget.stabilization_depth},
                   {"subset_dim_cap", r.budget.subset_dim_cap},
                   {"max_nodes", r.budget.max_nodes},
                   {"random_trials", r.budget.random_trials},
                   {"dmax", r.dmax}};
    j["input"] = {{"name", r.input.name},
                  {"components", r.input.components},
                  {"matrix", to_json(r.input.matrix)},
                  {"external", {{"u_alg", external_json(r.input.ualg)},
                                {"smooth_genus", external_json(r.input.smooth_genus)}}}};
    j["genus"] = r.genus;
    j["invariants"] = {{"alexander", to_json(r.invariants.alexander)},
                       {"signature", r.invariants.signature},
                       {"nullity", r.invariants.nullity},
                       {"breadth", r.invariants.breadth},
                       {"lower_bound_twice_galg", r.invariants.lower_bound_twice_galg}};
    json covers = json::array();
    for (const auto& c : r.covers) {
        json factors = json::array();
        for (const auto& a : c.invariant_factors) factors.push_back(int_json(a));
        covers.push_back({{"degree", c.degree},
                          {"invariant_factors", factors},
                          {"order", c.order ? int_json(*c.order) : json(nullptr)},
                          {"rank", c.rank}});
    }
    j["covers"] = covers;
    j["cg_bound"] = r.cg_bound ? json{{"bound", r.cg_bound->bound},
                                      {"degree", r.cg_bound->witness ? json(*r.cg_bound->witness) : json(nullptr)}}
                               : json(nullptr);
    j["bounds"] = {{"g_alg", to_json(r.galg)},
                   {"taylor_t", r.taylor ? to_json(*r.taylor) : json(nullptr)},
                   {"u_alg", r.ualg ? to_json(*r.ualg) : json(nullptr)}};
    j["ualg_certificate"] = r.w4 ? json{{"w4_size", r.w4->size()},
                                        {"w4_at_1", to_json(r.w4->at_one)},
                                        {"odd", r.w4->odd},
                                        {"indefinite", r.w4->indefinite},
                                        {"unimodular", r.w4->unimodular},
                                        {"certified", r.w4->certified}}
                                 : json(nullptr);
    j["ualg_reduction_failure"] = r.w4_failure;
    json certs = json::array();
    for (const auto& c : r.certificates)
        certs.push_back({{"quantity", to_string(c.quantity)},
                         {"kind", to_string(c.kind)},
                         {"stabilizations", c.stabilizations},
                         {"rank", c.basis.cols()},
                         {"basis", columns_json(c.basis)},
                         {"restricted", to_json(c.restricted)}});
    j["certificates"] = certs;
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.version = j.at("tool").at("version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const json& b = j.at("budget");
    r.budget.coefficient_cap = b.at("coefficient_cap").get<int>();
    r.budget.stabilization_depth = b.at("stabilization_depth").get<int>();
    r.budget.subset_dim_cap = b.at("subset_dim_cap").get<std::size_t>();
    r.budget.max_nodes = b.at("max_nodes").get<std::uint64_t>();
    r.budget.random_trials = b.at("random_trials").get<std::size_t>();
    r.budget.seed = r.seed;
    r.dmax = b.at("dmax").get<long>();

    const json& in = j.at("input");
    r.input.name = in.at("name").get<std::string>();
    r.input.components = in.at("components").get<std::size_t>();
    r.input.matrix = matrix_from(in.at("matrix"));
    r.input.ualg = external_from(in.at("external").at("u_alg"));
    r.input.smooth_genus = external_from(in.at("external").at("smooth_genus"));
    r.genus = j.at("genus").get<std::size_t>();

    const json& inv = j.at("invariants");
    r.invariants.alexander = laurent_from(inv.at("alexander"));
    r.invariants.signature = inv.at("signature").get<long>();
    r.invariants.nullity = inv.at("nullity").get<std::size_t>();
    r.invariants.breadth = inv.at("breadth").get<std::size_t>();
    r.invariants.lower_bound_twice_galg = inv.at("lower_bound_twice_galg").get<long>();

    for (const auto& c : j.at("covers")) {
        CoverHomology h;
        h.degree = c.at("degree").get<long>();
        for (const auto& a : c.at("invariant_factors")) h.invariant_factors.push_back(int_from(a));
        if (!c.at("order").is_null()) h.order = int_from(c.at("order"));
        h.rank = c.at("rank").get<std::size_t>();
        r.covers.push_back(std::move(h));
    }
    if (!j.at("cg_bound").is_null()) {
        CoverGenusBound cg;
        cg.bound = j["cg_bound"].at("bound").get<std::size_t>();
        if (!j["cg_bound"].at("degree").is_null()) cg.witness = j["cg_bound"]["degree"].get<long>();
        r.cg_bound = cg;
    }
    const json& bounds = j.at("bounds");
    r.galg = bound_report_from(bounds.at("g_alg"), Quantity::AlgebraicGenus);
    if (!bounds.at("taylor_t").is_null()) r.taylor = bound_report_from(bounds["taylor_t"], Quantity::TaylorInvariant);
    if (!bounds.at("u_alg").is_null()) r.ualg = bound_report_from(bounds["u_alg"], Quantity::AlgebraicUnknotting);
    if (!j.at("ualg_certificate").is_null()) {
        const json& w = j["ualg_certificate"];
        r.w4 = W4Record{matrix_from(w.at("w4_at_1")), w.at("odd").get<bool>(), w.at("indefinite").get<bool>(),
                        w.at("unimodular").get<bool>(), w.at("certified").get<bool>()};
    }
    r.w4_failure = j.at("ualg_reduction_failure").get<std::string>();
    for (const auto& c : j.at("certificates")) {
        CertificateRecord rec;
        rec.quantity = quantity_from_string(c.at("quantity").get<std::string>());
        rec.kind = subgroup_kind_from_string(c.at("kind").get<std::string>());
        rec.stabilizations = c.at("stabilizations").get<std::size_t>();
        rec.basis = columns_from(c.at("basis"), r.input.matrix.rows() + 2 * rec.stabilizations);
        rec.restricted = matrix_from(c.at("restricted"));
        r.certificates.push_back(std::move(rec));
    }
    return r;
}

std::string emit(const Report& r, Format format) {
    if (format == Format::Json) return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "seifert " << r.version << "  seed " << r.seed << "  node budget " << r.budget.max_nodes << "\n";
    os << "input: " << (r.input.name.empty() ? "(unnamed)" : r.input.name) << ", " << r.input.components
       << (r.input.components == 1 ? " component, " : " components, ") << r.input.matrix.rows() << "x"
       << r.input.matrix.cols() << ", genus " << r.genus << "\n";
    os << "matrix " << to_string(r.input.matrix) << "\n";
    if (r.input.ualg)
        os << "external u_alg " << r.input.ualg->value
           << (r.input.ualg->source.empty() ? "" : " (" + r.input.ualg->source + ")") << "\n";
    if (r.input.smooth_genus)
        os << "external smooth genus " << r.input.smooth_genus->value
           << (r.input.smooth_genus->source.empty() ? "" : " (" + r.input.smooth_genus->source + ")") << "\n";
    os << "\nAlexander polynomial: " << r.invariants.alexander.to_string() << "\n";
    os << "signature " << r.invariants.signature << ", nullity " << r.invariants.nullity << ", breadth "
       << r.invariants.breadth << "\n";
    os << "classical lower bound for 2 g_alg: " << r.invariants.lower_bound_twice_galg << "\n";
    os << "\nfirst homology of cyclic branched covers:\n";
    for (const auto& c : r.covers)
        os << "  d = " << c.degree << ": " << group_string(c.invariant_factors) << "  (r_" << c.degree << " = "
           << c.rank << ")\n";
    if (r.cg_bound)
        os << "branched-cover genus bound: " << r.cg_bound->bound
           << (r.cg_bound->witness ? " at d = " + std::to_string(*r.cg_bound->witness) : std::string()) << "\n";
    os << "\n" << bound_line(r.galg);
    if (r.taylor) os << bound_line(*r.taylor);
    if (r.ualg) os << bound_line(*r.ualg);
    if (r.w4) {
        os << "W4(1) = " << to_string(r.w4->at_one) << " size " << r.w4->size() << ": " << (r.w4->odd ? "odd" : "even")
           << ", " << (r.w4->indefinite ? "indefinite" : "definite") << ", "
           << (r.w4->unimodular ? "unimodular" : "not unimodular")
           << (r.w4->certified ? "; diagonalizable by the odd indefinite unimodular criterion"
                               : "; sufficient criterion not met")
           << "\n";
    } else if (!r.w4_failure.empty()) {
        os << "W4 reduction failed: " << r.w4_failure << "\n";
    }
    os << "\ncertificates:\n";
    if (r.certificates.empty()) os << "  none\n";
    for (const auto& c : r.certificates) {
        os << "  " << to_string(c.quantity) << ": " << to_string(c.kind) << " rank " << c.basis.cols();
        if (c.stabilizations) os << " after " << c.stabilizations << " stabilization(s)";
        os << "\n    basis vectors " << to_string(c.basis.transpose()) << "\n    restricted " << to_string(c.restricted)
           << "\n";
    }
    return os.str();
}

} // namespace seifert
