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

#include <seifert/laurent.hpp>
#include <seifert/linalg.hpp>

#include <optional>

namespace seifert {

/*
 * Integer matrix M together with a component count r such that M - M^T has
 * a radical of rank r - 1 and is unimodular on the quotient by it. Only
 * validate() builds one.
 */
class SeifertForm {
public:
    static SeifertForm validate(IntMatrix M, std::size_t components = 1);

    const IntMatrix& matrix() const noexcept { return M_; }
    std::size_t components() const noexcept { return r_; }
    std::size_t genus() const noexcept { return g_; }
    std::size_t dim() const noexcept { return M_.rows(); }
    bool is_knot() const noexcept { return r_ == 1; }

private:
    SeifertForm(IntMatrix M, std::size_t r, std::size_t g) : M_(std::move(M)), r_(r), g_(g) {}

    IntMatrix M_;
    std::size_t r_;
    std::size_t g_;
};

// t^-g det(tM - M^T), no normalization
LaurentPoly alexander_polynomial_raw(const SeifertForm& f);
// canonical representative, see LaurentPoly::canonical
LaurentPoly alexander_polynomial(const SeifertForm& f);

struct SignatureNullity {
    long signature;
    std::size_t nullity;
};

SignatureNullity signature_and_nullity(const SeifertForm& f);

// signature of (1-w)M + (1-w^-1)M^T at w = exp(2 pi i j/d), 0 < j < d;
// throws SingularAtOmega when w is a root of the Alexander polynomial
long levine_tristram(const SeifertForm& f, long j, long d);

// Phi_d as ascending integer coefficients
std::vector<Integer> cyclotomic_polynomial(long d);

// max(|sigma| + eta - r + 1, r2 - r + 1), a lower bound for twice the algebraic genus
long classical_lower_bounds(const SeifertForm& f, std::size_t r2);

struct InvariantSet {
    LaurentPoly alexander;
    long signature = 0;
    std::size_t nullity = 0;
    std::size_t breadth = 0;
    long lower_bound_twice_galg = 0;
};

InvariantSet compute_invariants(const SeifertForm& f, std::size_t r2);

} // namespace seifert
