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

#include <cmath>
#include <complex>

using namespace seifert;

namespace {

ValidationKind rejection(const IntMatrix& M, std::size_t r) {
    try {
        SeifertForm::validate(M, r);
    } catch (const ValidationError& e) {
        return e.kind();
    }
    FAIL("form was accepted");
    return ValidationKind::NotSquare;
}

// signature of the Hermitian matrix by Sylvester's leading minors in double
// precision; empty when some minor is too close to zero to trust
std::optional<long> numeric_hermitian_signature(const IntMatrix& M, long j, long d) {
    using C = std::complex<double>;
    const double pi = std::acos(-1.0);
    const C w = std::polar(1.0, 2 * pi * j / d);
    const std::size_t n = M.rows();
    std::vector<std::vector<C>> H(n, std::vector<C>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            H[a][b] = (1.0 - w) * M(a, b).get_d() + (1.0 - std::conj(w)) * M(b, a).get_d();
    long neg = 0;
    double prev = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        // leading k x k minor by Gaussian elimination on a copy
        std::vector<std::vector<C>> A(k, std::vector<C>(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) A[a][b] = H[a][b];
        C det = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            for (std::size_t r = c + 1; r < k; ++r)
                if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
            if (std::abs(A[p][c]) < 1e-12) return std::nullopt;
            if (p != c) {
                std::swap(A[p], A[c]);
                det = -det;
            }
            det *= A[c][c];
            for (std::size_t r = c + 1; r < k; ++r) {
                const C f = A[r][c] / A[c][c];
                for (std::size_t b = c; b < k; ++b) A[r][b] -= f * A[c][b];
            }
        }
        const double cur = det.real();
        if (std::abs(cur) < 1e-6) return std::nullopt;
        if ((cur > 0) != (prev > 0)) ++neg;
        prev = cur;
    }
    return static_cast<long>(n) - 2 * neg;
}

} // namespace

TEST_CASE("validation") {
    const auto tre = SeifertForm::validate(forms::trefoil());
    CHECK(tre.genus() == 1);
    CHECK(tre.is_knot());
    const auto l = SeifertForm::validate(forms::l8n2(), 2);
    CHECK(l.genus() == 2);
    CHECK(l.components() == 2);
    CHECK(SeifertForm::validate(IntMatrix{{0}}, 2).genus() == 0);
    CHECK(SeifertForm::validate(IntMatrix(0, 0), 1).genus() == 0);

    CHECK(rejection(IntMatrix(2, 2), 1) == ValidationKind::RadicalRank);
    CHECK(rejection(IntMatrix(2, 3), 1) == ValidationKind::NotSquare);
    CHECK(rejection(forms::trefoil(), 0) == ValidationKind::Components);
    CHECK(rejection(forms::trefoil(), 2) == ValidationKind::Parity);
    CHECK(rejection(forms::zeta().block(0, 0, 1, 1), 1) == ValidationKind::Parity);
    CHECK(rejection(IntMatrix{{0, 2}, {0, 0}}, 1) == ValidationKind::NotUnimodular);
    CHECK(rejection(forms::l8n2(), 1) == ValidationKind::Parity);
    CHECK(rejection(forms::l8n2(), 4) == ValidationKind::RadicalRank);
    CHECK(std::string(to_string(ValidationKind::NotUnimodular)) == "antisymmetric-not-unimodular");
}

TEST_CASE("Alexander polynomials") {
    CHECK(alexander_polynomial(SeifertForm::validate(forms::k12a908())).to_string() ==
          "4t^3 - 22t^2 + 55t - 73 + 55t^-1 - 22t^-2 + 4t^-3");
    CHECK(alexander_polynomial(SeifertForm::validate(forms::unknot_like())) == LaurentPoly(1));
    CHECK(alexander_polynomial(SeifertForm::validate(forms::trefoil())).to_string() == "t - 1 + t^-1");
    CHECK(alexander_polynomial_raw(SeifertForm::validate(forms::trefoil())) == LaurentPoly(-1, {1, -1, 1}));
}

TEST_CASE("signature and nullity") {
    auto sn = signature_and_nullity(SeifertForm::validate(forms::theta()));
    CHECK(sn.signature == 0);
    CHECK(sn.nullity == 0);
    sn = signature_and_nullity(SeifertForm::validate(forms::k10_103()));
    CHECK(sn.signature == 2);
    CHECK(sn.nullity == 0);
    sn = signature_and_nullity(SeifertForm::validate(IntMatrix{{0}}, 2));
    CHECK(sn.signature == 0);
    CHECK(sn.nullity == 1);
}

TEST_CASE("Levine-Tristram signatures") {
    const auto tre = SeifertForm::validate(forms::trefoil());
    CHECK(levine_tristram(tre, 1, 2) == signature_and_nullity(tre).signature);
    CHECK(levine_tristram(tre, 1, 4) == -2);
    // Delta = t - 1 + t^-1 vanishes at primitive sixth roots of unity only
    CHECK_THROWS_AS(levine_tristram(tre, 1, 6), SingularAtOmega);
    CHECK(levine_tristram(tre, 1, 3) == -2);
    CHECK(levine_tristram(tre, 1, 8) == 0);
    CHECK(levine_tristram(tre, 2, 4) == levine_tristram(tre, 1, 2));
    CHECK_THROWS_AS(levine_tristram(tre, 0, 4), ContractError);
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("Levine-Tristram agrees with a floating-point Hermitian oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> half(1, 3);
    int compared = 0;
    for (int k = 0; k < 150; ++k) {
        const IntMatrix M = oracle::random_knot_form(rng, 2 * half(rng));
        const auto f = SeifertForm::validate(M);
        REQUIRE(levine_tristram(f, 1, 2) == signature_and_nullity(f).signature);
        for (long d = 3; d <= 8; ++d)
            for (long j = 1; 2 * j <= d; ++j) {
                if (std::gcd(j, d) != 1) continue;
                long exact;
                try {
                    exact = levine_tristram(f, j, d);
                } catch (const SingularAtOmega&) {
                    continue;
                }
                const auto approx = numeric_hermitian_signature(M, j, d);
                if (!approx) continue;
                REQUIRE(exact == *approx);
                ++compared;
            }
    }
    CHECK(compared > 500);
}

TEST_CASE("classical lower bounds") {
    const auto ex = SeifertForm::validate(forms::slice_r2_six());
    CHECK(classical_lower_bounds(ex, homology_structure(ex, 2).rank) == 6);
    const auto k = SeifertForm::validate(forms::k12a908());
    CHECK(classical_lower_bounds(k, homology_structure(k, 2).rank) == 2);
    const auto u = SeifertForm::validate(forms::unknot_like());
    CHECK(classical_lower_bounds(u, homology_structure(u, 2).rank) == 0);
    // r2 = 1 for this link, and its algebraic genus is 0
    const auto l = SeifertForm::validate(forms::l8n2(), 2);
    CHECK(homology_structure(l, 2).rank == 1);
    CHECK(classical_lower_bounds(l, 1) == 0);
    const auto inv = compute_invariants(k, homology_structure(k, 2).rank);
    CHECK(inv.breadth == 6);
    CHECK(std::labs(inv.signature) == 2);
    CHECK(inv.lower_bound_twice_galg == 2);
}

TEST_CASE("properties on random knot forms") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> half(1, 3);
    for (int k = 0; k < 200; ++k) {
        const IntMatrix M = oracle::random_knot_form(rng, 2 * half(rng));
        const auto f = SeifertForm::validate(M);
        const LaurentPoly raw = alexander_polynomial_raw(f);
        REQUIRE(raw.at_one() == 1);
        const LaurentPoly delta = alexander_polynomial(f);
        REQUIRE(delta.is_palindromic());
        REQUIRE(delta.coefficients().back() > 0);
        const auto sn = signature_and_nullity(f);
        REQUIRE(static_cast<std::size_t>(std::labs(sn.signature)) + sn.nullity <= f.dim());
        const std::size_t r2 = homology_structure(f, 2).rank;
        for (const IntMatrix& N : {IntMatrix(M.transpose()), IntMatrix(-M)}) {
            const auto g = SeifertForm::validate(N);
            const auto sg = signature_and_nullity(g);
            REQUIRE(std::labs(sg.signature) == std::labs(sn.signature));
            REQUIRE(sg.nullity == sn.nullity);
            REQUIRE(alexander_polynomial(g).breadth() == delta.breadth());
            REQUIRE(homology_structure(g, 2).rank == r2);
        }
    }
}
