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

#include <seifert/seifert_form.hpp>

#include <optional>

namespace seifert {

struct CoverHomology {
    long degree = 0;
    IntMatrix presentation;
    // non-unit invariant factors in divisibility order; 0 marks a free summand
    std::vector<Integer> invariant_factors;
    std::optional<Integer> order;  // empty when infinite
    std::size_t rank = 0;          // minimal number of generators
};

// P^d - (P - 1)^d with P = (M^T - M)^-1 M^T; knots only
IntMatrix cover_presentation(const SeifertForm& f, long d);
CoverHomology homology_structure(const SeifertForm& f, long d);

bool is_prime_power(long d);

struct CoverGenusBound {
    std::size_t bound = 0;
    std::optional<long> witness;
};

// max over prime powers d <= min(d_max, max(2, breadth/2)) of ceil(r_d / (2(d-1)))
CoverGenusBound cg_genus_lower_bound(const SeifertForm& f, long d_max);

} // namespace seifert
