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
#include <seifert/errors.hpp>

#include "known_forms.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace seifert;

TEST_CASE("search: known forms") {
    const SearchBudget budget;
    const auto l = search_alexander_trivial(SeifertForm::validate(forms::l8n2(), 2), budget);
    CHECK(l.best.verified);
    CHECK(l.best.rank() == 4);
    CHECK(l.proven_maximal());

    const auto k = search_alexander_trivial(SeifertForm::validate(forms::k10_103()), budget);
    CHECK(k.best.verified);
    CHECK(k.best.rank() >= 2);

    const auto ex = search_alexander_trivial(SeifertForm::validate(forms::slice_r2_six()), budget);
    CHECK(ex.best.rank() == 0);
    CHECK(ex.rank_cap == 0);
    CHECK(ex.proven_maximal());

    const auto k12 = search_alexander_trivial(SeifertForm::validate(forms::k12a908()), budget);
    CHECK(k12.best.verified);
    CHECK(k12.best.rank() == 4);

    const auto u = search_alexander_trivial(SeifertForm::validate(forms::unknot_like()), budget);
    CHECK(u.best.rank() == 2);
}

TEST_CASE("search: isotropic subgroups") {
    const SearchBudget budget;
    const auto k = search_isotropic(SeifertForm::validate(forms::k10_103()), budget);
    CHECK(k.best.verified);
    CHECK(k.best.rank() == 2);
    CHECK(k.proven_maximal());
    const auto ex = search_isotropic(SeifertForm::validate(forms::slice_r2_six()), budget);
    CHECK(ex.best.rank() == 3);
    CHECK(search_isotropic(SeifertForm::validate(forms::zeta()), budget).best.rank() == 1);
    CHECK(search_isotropic(SeifertForm::validate(forms::trefoil()), budget).best.rank() == 0);
}

TEST_CASE("search is deterministic") {
    SearchBudget budget;
    budget.max_nodes = 50'000;
    std::mt19937_64 rng(61);
    for (int s = 0; s < 20; ++s) {
        const auto f = SeifertForm::validate(oracle::random_knot_form(rng, 6));
        const auto a = search_alexander_trivial(f, budget);
        const auto b = search_alexander_trivial(f, budget);
        REQUIRE(a.best.basis == b.best.basis);
        REQUIRE(a.nodes == b.nodes);
        REQUIRE(a.budget_exhausted == b.budget_exhausted);
    }
}

TEST_CASE("search agrees with exhaustive enumeration on all 2x2 forms") {
    const SearchBudget budget;
    int forms_seen = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    const IntMatrix M{{a, b}, {c, d}};
                    if (!oracle::is_knot_form(M)) continue;
                    ++forms_seen;
                    const auto r = search_alexander_trivial(SeifertForm::validate(M), budget);
                    REQUIRE(r.best.verified);
                    REQUIRE(r.best.rank() == oracle::max_alexander_trivial_rank(M));
                }
    CHECK(forms_seen > 0);
}

TEST_CASE("search agrees with exhaustive enumeration on random 4x4 forms") {
    const SearchBudget budget;
    std::mt19937_64 rng(62);
    for (int s = 0; s < 120; ++s) {
        const IntMatrix M = oracle::random_knot_form(rng, 4);
        const auto r = search_alexander_trivial(SeifertForm::validate(M), budget);
        REQUIRE(r.best.verified);
        std::size_t truth = oracle::max_alexander_trivial_rank(M);
        // the oracle enumerates a bounded box, so widen it before disagreeing
        if (r.best.rank() != truth) truth = oracle::max_alexander_trivial_rank(M, 3);
        REQUIRE(r.best.rank() == truth);
    }
}

TEST_CASE("mirror and transpose invariance of the best rank") {
    const SearchBudget budget;
    std::mt19937_64 rng(63);
    for (int s = 0; s < 60; ++s) {
        const IntMatrix M = oracle::random_knot_form(rng, 2 + 2 * (s % 2));
        const std::size_t r = search_alexander_trivial(SeifertForm::validate(M), budget).best.rank();
        REQUIRE(search_alexander_trivial(SeifertForm::validate(M.transpose()), budget).best.rank() == r);
        REQUIRE(search_alexander_trivial(SeifertForm::validate(-M), budget).best.rank() == r);
    }
}

TEST_CASE("certificates survive stabilization and crossing changes") {
    const SearchBudget budget;
    std::mt19937_64 rng(64);
    for (int s = 0; s < 30; ++s) {
        const auto f = SeifertForm::validate(oracle::random_knot_form(rng, 4));
        const auto best = search_alexander_trivial(f, budget).best;
        const auto st = stabilize(f, std::vector<Integer>(4, Integer(s % 3 - 1)));
        REQUIRE(lift_through_stabilization(st, best).verified);
        REQUIRE(search_alexander_trivial(st, budget).best.rank() >= best.rank() + 2);
        const auto moved = crossing_change_move(f, s % 2 ? 1 : -1);
        const auto carried = lift_through_crossing_change(moved, best);
        REQUIRE(carried.verified);
        REQUIRE(carried.rank() == best.rank());
    }
}

TEST_CASE("lll reduction") {
    const IntMatrix B = forms::columns({{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}});
    const IntMatrix R = lll_reduce(B);
    CHECK(abs(determinant(R)) == abs(determinant(B)));
    // R and B span the same lattice
    CHECK(solve_integer(B, R.block(0, 0, 3, 1)).has_value());
    CHECK(solve_integer(R, B.block(0, 2, 3, 1)).has_value());
    auto norm2 = [](const IntMatrix& M, std::size_t j) {
        Integer s = 0;
        for (std::size_t i = 0; i < M.rows(); ++i) s += M(i, j) * M(i, j);
        return s;
    };
    CHECK(norm2(R, 0) <= norm2(B, 0));
    CHECK(lll_reduce(IntMatrix::identity(3)) == IntMatrix::identity(3));

    std::mt19937_64 rng(65);
    for (int s = 0; s < 100; ++s) {
        const IntMatrix M = oracle::random_matrix(rng, 4, -9, 9);
        if (determinant(M) == 0) continue;
        const IntMatrix L = lll_reduce(M);
        REQUIRE(abs(determinant(L)) == abs(determinant(M)));
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(solve_integer(M, L.block(0, j, 4, 1)).has_value());
        // Lovasz: the first vector is within 2^((n-1)/2) of the shortest column of M
        Integer shortest = norm2(M, 0);
        for (std::size_t j = 1; j < 4; ++j) shortest = std::min(shortest, Integer(norm2(M, j)));
        REQUIRE(norm2(L, 0) <= 8 * shortest);
    }
}
