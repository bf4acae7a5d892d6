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

#include <seifert/matrix.hpp>

#include <optional>
#include <vector>

namespace seifert {

Integer determinant(const IntMatrix& M);
std::size_t rank(const IntMatrix& M);

struct SnfDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    // diagonal of D, length min(rows, cols)
    std::vector<Integer> diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& M);

// cokernel factors that are not 1, zeros (free part) last
std::vector<Integer> nonunit_invariant_factors(const IntMatrix& M);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

Inertia inertia(const IntMatrix& S);
long signature_symmetric(const IntMatrix& S);
std::size_t radical_rank(const IntMatrix& S);

// T^T M T; T may be rectangular (restriction to the span of its columns)
IntMatrix apply_congruence(const IntMatrix& M, const IntMatrix& T);

// integer x with A x = b (b a column), if one exists
std::optional<IntMatrix> solve_integer(const IntMatrix& A, const IntMatrix& b);

// columns form a basis of {x in Z^n : A x = 0}
IntMatrix integer_kernel(const IntMatrix& A);

IntMatrix inverse_unimodular(const IntMatrix& M);

// the columns span a direct summand of Z^n
bool is_summand(const IntMatrix& columns);

// unimodular matrix whose leading columns are the given ones
IntMatrix complete_to_unimodular(const IntMatrix& columns);

IntMatrix symmetrize(const IntMatrix& M);      // M + M^T
IntMatrix antisymmetrize(const IntMatrix& M);  // M - M^T

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

} // namespace seifert
