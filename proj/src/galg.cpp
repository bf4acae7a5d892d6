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

#include <seifert/bounds.hpp>

#include <map>
#include <numeric>

namespace seifert {

const char* to_string(Quantity q) {
    switch (q) {
    case Quantity::AlgebraicGenus: return "g_alg";
    case Quantity::TaylorInvariant: return "taylor_t";
    case Quantity::AlgebraicUnknotting: return "u_alg";
    }
    return "unknown";
}

Quantity quantity_from_string(const std::string& s) {
    if (s == "g_alg") return Quantity::AlgebraicGenus;
    if (s == "taylor_t") return Quantity::TaylorInvariant;
    if (s == "u_alg") return Quantity::AlgebraicUnknotting;
    throw ContractError("unknown quantity '" + s + "'");
}

namespace {

long ceil_half(long x) { return x <= 0 ? 0 : (x + 1) / 2; }

// max over sampled nonsingular roots of unity of ceil(|sigma_w| / 2)
std::pair<long, std::string> signature_lower_bound(const SeifertForm& f) {
    long best = 0;
    std::string where = "1/2";
    for (long d = 2; d <= 12; ++d)
        for (long j = 1; 2 * j <= d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            long s;
            try {
                s = levine_tristram(f, j, d);
            } catch (const SingularAtOmega&) {
                continue;
            }
            const long b = ceil_half(std::labs(s));
            if (b > best) {
                best = b;
                where = std::to_string(j) + "/" + std::to_string(d);
            }
        }
    return {best, where};
}

} // namespace

IntMatrix direct_sum_power(const IntMatrix& M, std::size_t copies) {
    IntMatrix R(M.rows() * copies, M.cols() * copies);
    for (std::size_t c = 0; c < copies; ++c) R.set_block(c * M.rows(), c * M.cols(), M);
    return R;
}

SeifertForm stabilize_zero(const SeifertForm& f, std::size_t times) {
    SeifertForm s = f;
    for (std::size_t k = 0; k < times; ++k) s = stabilize(s, std::vector<Integer>(s.dim(), Integer(0)));
    return s;
}

BoundReport taylor_bounds(const SeifertForm& f, const SearchBudget& budget) {
    if (!f.is_knot()) throw ContractError("Taylor's invariant is defined for knots");
    BoundReport rep;
    rep.quantity = Quantity::TaylorInvariant;
    const auto [sig, where] = signature_lower_bound(f);
    rep.lower = {sig, "levine-tristram signature at " + where, true};
    const auto iso = search_isotropic(f, budget);
    const long n = static_cast<long>(f.dim() / 2);
    rep.upper = {n - static_cast<long>(iso.best.rank()), "isotropic subgroup of rank " + std::to_string(iso.best.rank()),
                 true};
    rep.budget_exhausted = iso.budget_exhausted;
    SubgroupCertificate c = iso.best;
    if (2 * c.rank() == f.dim() && c.rank() > 0) c = verify_metabolizer(f, c.basis);
    rep.certificates.push_back({c, f.matrix(), 0});
    return rep;
}

namespace {

struct Representation {
    std::size_t copies = 0;
    std::vector<Integer> w;  // concatenated blocks
};

// shortest sum of values v^T M v hitting target, over box vectors
std::optional<Representation> represent(const IntMatrix& M, const Integer& target, const StableBudget& budget) {
    const std::size_t n = M.rows();
    if (target == 0) return Representation{};
    std::vector<std::pair<Integer, std::vector<Integer>>> values;
    std::vector<long> c(n, -budget.coefficient_cap);
    while (true) {
        IntMatrix v(n, 1);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) = c[i];
        const Integer q = (v.transpose() * M * v)(0, 0);
        if (q != 0) values.emplace_back(q, v.column(0));
        std::size_t i = 0;
        while (i < n && c[i] == budget.coefficient_cap) c[i++] = -budget.coefficient_cap;
        if (i == n) break;
        ++c[i];
    }
    if (values.empty()) return std::nullopt;
    Integer qmax = 0;
    for (const auto& [q, _] : values) qmax = std::max(qmax, Integer(abs(q)));
    const Integer range = 2 * (abs(target) + qmax);
    // layers[k]: reachable sums with k summands -> (previous sum, value index)
    std::vector<std::map<Integer, std::pair<Integer, std::size_t>>> layers(1);
    layers[0][Integer(0)] = {Integer(0), 0};
    for (std::size_t k = 1; k <= budget.max_copies; ++k) {
        std::map<Integer, std::pair<Integer, std::size_t>> next;
        for (const auto& [s, _] : layers[k - 1])
            for (std::size_t idx = 0; idx < values.size(); ++idx) {
                const Integer t = s + values[idx].first;
                if (abs(t) > range) continue;
                next.emplace(t, std::make_pair(s, idx));
            }
        layers.push_back(std::move(next));
        if (layers[k].count(target)) {
            Representation r;
            r.copies = k;
            Integer cur = target;
            std::vector<std::vector<Integer>> blocks;
            for (std::size_t l = k; l > 0; --l) {
                const auto [prev, idx] = layers[l].at(cur);
                blocks.push_back(values[idx].second);
                cur = prev;
            }
            for (const auto& b : blocks) r.w.insert(r.w.end(), b.begin(), b.end());
            return r;
        }
    }
    return std::nullopt;
}

} // namespace

StableDefectResult stable_defect_certificate(const SeifertForm& f, const StableBudget& budget) {
    StableDefectResult out;
    const auto sn = signature_and_nullity(f);
    const std::size_t r2 = homology_structure(f, 2).rank;
    const std::size_t dim = f.dim();
    out.hypothesis_holds = std::max<std::size_t>(std::labs(sn.signature) + sn.nullity, r2) < dim;
    if (!out.hypothesis_holds) return out;

    const IntMatrix& A = f.matrix();
    const IntMatrix S = antisymmetrize(A);
    // candidate pairs e_i, +-e_j with e_i^T S (+-e_j) = 1
    std::vector<std::pair<std::vector<Integer>, std::vector<Integer>>> pairs;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (abs(S(i, j)) != 1) continue;
            std::vector<Integer> v1(dim, Integer(0)), v2(dim, Integer(0));
            v1[i] = 1;
            v2[j] = S(i, j);
            pairs.emplace_back(v1, v2);
        }
    if (pairs.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            IntMatrix e(dim, 1);
            e(i, 0) = 1;
            const auto y = solve_integer(e.transpose() * S, IntMatrix{{1}});
            if (y) pairs.emplace_back(e.column(0), y->column(0));
        }
    }

    std::optional<std::size_t> best_copies;
    for (const auto& [v1, v2] : pairs) {
        const IntMatrix x1 = IntMatrix::from_columns({v1}), x2 = IntMatrix::from_columns({v2});
        const Integer m1 = -(x1.transpose() * A * x2)(0, 0);
        const Integer m2 = (x1.transpose() * A * (x2 - x1))(0, 0);
        const auto r1 = represent(A, m1, budget);
        if (!r1) continue;
        const auto r2rep = represent(A, m2, budget);
        if (!r2rep) continue;
        const std::size_t copies = 1 + r1->copies + r2rep->copies;
        if (best_copies && copies >= *best_copies) continue;
        best_copies = copies;
        out.copies = copies;
        out.v1 = v1;
        out.v2 = v2;
        out.w1 = r1->w;
        out.w2 = r2rep->w;
    }
    if (!best_copies) throw BudgetExhausted();

    out.ambient = direct_sum_power(A, out.copies);
    const SeifertForm big = SeifertForm::validate(out.ambient, out.copies * (f.components() - 1) + 1);
    std::vector<Integer> u1 = out.v1, u2 = out.v2;
    u1.insert(u1.end(), out.w1.begin(), out.w1.end());
    u1.insert(u1.end(), out.w2.begin(), out.w2.end());
    u2.insert(u2.end(), out.w1.begin(), out.w1.end());
    u2.resize(u1.size(), Integer(0));
    auto cert = verify_alexander_trivial(big, IntMatrix::from_columns({u1, u2}));
    if (!cert.verified) throw InternalConsistencyError("stable-defect subgroup failed verification: " + cert.reason);
    out.certificate = std::move(cert);
    return out;
}

BoundReport galg_bounds(const SeifertForm& f, const SearchBudget& budget, std::optional<std::size_t> external_ualg) {
    BoundReport rep;
    rep.quantity = Quantity::AlgebraicGenus;
    const auto sn = signature_and_nullity(f);
    const std::size_t r2 = homology_structure(f, 2).rank;
    const long r = static_cast<long>(f.components());

    auto raise_lower = [&](long v, std::string why) {
        if (v > rep.lower.value) rep.lower = {v, std::move(why), true};
    };
    rep.lower = {0, "trivial", true};
    raise_lower(ceil_half(std::labs(sn.signature) + static_cast<long>(sn.nullity) - r + 1), "signature and nullity");
    raise_lower(ceil_half(static_cast<long>(r2) - r + 1), "double branched cover rank r2 = " + std::to_string(r2));
    if (f.is_knot()) {
        const auto [sig, where] = signature_lower_bound(f);
        raise_lower(sig, "levine-tristram signature at " + where);
    }
    if (external_ualg) raise_lower(ceil_half(static_cast<long>(*external_ualg)), "external u_alg");

    const long g = static_cast<long>(f.genus());
    rep.upper = {g, "genus of the form", true};
    if (f.is_knot()) {
        const LaurentPoly delta = alexander_polynomial(f);
        const long half = static_cast<long>(delta.breadth() / 2);
        if (half < rep.upper.value) rep.upper = {half, "half the Alexander breadth (theorem-based, no certificate)", false};
    }

    for (std::size_t s = 0; s <= static_cast<std::size_t>(budget.stabilization_depth); ++s) {
        if (s > 0 && rep.determined()) break;
        const SeifertForm form = stabilize_zero(f, s);
        const long gs = static_cast<long>(form.genus());
        const std::size_t cap = 2 * static_cast<std::size_t>(std::max(0L, gs - rep.lower.value));
        const auto res = search_alexander_trivial(form, budget, cap);
        rep.budget_exhausted = rep.budget_exhausted || res.budget_exhausted;
        const long ub = gs - static_cast<long>(res.best.rank() / 2);
        const bool better = ub < rep.upper.value || (ub == rep.upper.value && !rep.upper.certified);
        if (better) {
            rep.upper = {ub, "alexander-trivial subgroup of rank " + std::to_string(res.best.rank()) +
                                 (s ? " after " + std::to_string(s) + " stabilization(s)" : std::string()),
                         true};
            rep.certificates.assign(1, {res.best, form.matrix(), s});
        } else if (rep.certificates.empty()) {
            rep.certificates.push_back({res.best, form.matrix(), s});
        }
    }
    if (rep.lower.value > rep.upper.value)
        throw InternalConsistencyError("algebraic genus lower bound exceeds upper bound");
    return rep;
}

} // namespace seifert
