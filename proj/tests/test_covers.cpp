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

#include <seifert/covers.hpp>
#include <seifert/errors.hpp>

#include "known_forms.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace seifert;

namespace {

// P^d - (P - 1)^d by repeated multiplication, P from the cofactor inverse
IntMatrix presentation_oracle(const IntMatrix& M, long d) {
    const std::size_t n = M.rows();
    const IntMatrix A = M.transpose() - M;
    const Integer det = oracle::cofactor_det(A);
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer c = oracle::cofactor_det(oracle::minor_of(A, j, i));
            adj(i, j) = (i + j) % 2 ? Integer(-c) : c;
        }
    const IntMatrix P = det * (adj * M.transpose());  // det = +-1, so A^-1 = det * adj
    const IntMatrix Q = P - IntMatrix::identity(n);
    IntMatrix Pd = IntMatrix::identity(n), Qd = IntMatrix::identity(n);
    for (long k = 0; k < d; ++k) {
        Pd = Pd * P;
        Qd = Qd * Q;
    }
    return Pd - Qd;
}

} // namespace

TEST_CASE("cover presentations of the trefoil") {
    const auto tre = SeifertForm::validate(forms::trefoil());
    CHECK(cover_presentation(tre, 2) == IntMatrix{{1, -2}, {2, -1}});
    CHECK(cover_presentation(tre, 3) == IntMatrix{{-2, 0}, {0, -2}});
    const auto h2 = homology_structure(tre, 2);
    CHECK(h2.invariant_factors == std::vector<Integer>{3});
    CHECK(h2.rank == 1);
    CHECK(h2.order == Integer(3));
    const auto h3 = homology_structure(tre, 3);
    CHECK(h3.invariant_factors == std::vector<Integer>{2, 2});
    CHECK(h3.rank == 2);
    const auto h6 = homology_structure(tre, 6);
    CHECK_FALSE(h6.order.has_value());
    CHECK(h6.rank == 2);
}

TEST_CASE("cover homology of known forms") {
    const auto k = SeifertForm::validate(forms::k10_103());
    const auto h = homology_structure(k, 2);
    CHECK(h.invariant_factors == std::vector<Integer>{5, 15});
    CHECK(h.rank == 2);
    const auto ex = SeifertForm::validate(forms::slice_r2_six());
    CHECK(homology_structure(ex, 2).rank == 6);
    const auto l = SeifertForm::validate(forms::l8n2(), 2);
    CHECK(homology_structure(l, 2).invariant_factors == std::vector<Integer>{8});
    CHECK_THROWS_AS(homology_structure(l, 3), KnotsOnlyError);
    CHECK_THROWS_AS(cover_presentation(l, 2), KnotsOnlyError);
}

TEST_CASE("branched-cover genus bound") {
    auto b = cg_genus_lower_bound(SeifertForm::validate(forms::slice_r2_six()), 12);
    CHECK(b.bound == 3);
    CHECK(b.witness == 2L);
    b = cg_genus_lower_bound(SeifertForm::validate(forms::k10_103()), 12);
    CHECK(b.bound == 1);
    CHECK(b.witness == 2L);
    b = cg_genus_lower_bound(SeifertForm::validate(forms::unknot_like()), 12);
    CHECK(b.bound == 0);
    CHECK_FALSE(b.witness.has_value());
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(9));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("cover properties on random knot forms") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> half(1, 2);
    for (int k = 0; k < 150; ++k) {
        const IntMatrix M = oracle::random_knot_form(rng, 2 * half(rng));
        const auto f = SeifertForm::validate(M);
        const LaurentPoly delta = alexander_polynomial(f);
        for (long d = 2; d <= 7; ++d) {
            const auto h = homology_structure(f, d);
            REQUIRE(h.presentation == presentation_oracle(M, d));
            REQUIRE(h.invariant_factors == oracle::cokernel_factors(h.presentation));
            if (is_prime_power(d)) REQUIRE(h.rank <= delta.breadth());
            if (d == 2) {
                REQUIRE(h.invariant_factors == nonunit_invariant_factors(symmetrize(M)));
                REQUIRE(h.order.has_value());
                REQUIRE(*h.order == abs(alexander_polynomial_raw(f).at_minus_one()));
            }
            if (d % 2 == 1 && is_prime_power(d)) {
                REQUIRE(h.rank % 2 == 0);
                std::map<Integer, int> mult;
                for (const auto& a : h.invariant_factors) ++mult[a];
                for (const auto& [a, m] : mult) REQUIRE(m % 2 == 0);
            }
        }
    }
}
