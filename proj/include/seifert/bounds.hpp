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

#include <seifert/covers.hpp>
#include <seifert/search.hpp>

#include <optional>
#include <string>
#include <vector>

namespace seifert {

enum class Quantity { AlgebraicGenus, TaylorInvariant, AlgebraicUnknotting };

const char* to_string(Quantity q);
Quantity quantity_from_string(const std::string& s);

struct Bound {
    long value = 0;
    std::string provenance;
    // true when the value is backed by a certificate or an exact invariant
    // computation; false for bounds quoted from a theorem without a witness
    bool certified = true;
};

/*
 * A certificate plus the form it refers to. Certificates found after
 * stabilization live on a larger lattice; `stabilizations` counts the
 * zero-vector stabilizations applied to the input form to reach `ambient`.
 */
struct BoundCertificate {
    SubgroupCertificate certificate;
    IntMatrix ambient;
    std::size_t stabilizations = 0;
};

struct BoundReport {
    Quantity quantity = Quantity::AlgebraicGenus;
    Bound lower;
    Bound upper;
    std::vector<BoundCertificate> certificates;
    bool budget_exhausted = false;

    bool determined() const noexcept { return lower.value == upper.value; }
};

BoundReport taylor_bounds(const SeifertForm& f, const SearchBudget& budget);

struct StableDefectResult {
    bool hypothesis_holds = false;
    std::size_t copies = 0;  // the certificate lives in the direct sum of this many copies
    std::vector<Integer> v1, v2, w1, w2;
    std::optional<SubgroupCertificate> certificate;
    IntMatrix ambient;
};

struct StableBudget {
    int coefficient_cap = 2;
    std::size_t max_copies = 8;
};

// throws BudgetExhausted when the representations are not found within budget
StableDefectResult stable_defect_certificate(const SeifertForm& f, const StableBudget& budget = {});

// block sum of `copies` copies of M
IntMatrix direct_sum_power(const IntMatrix& M, std::size_t copies);

BoundReport galg_bounds(const SeifertForm& f, const SearchBudget& budget,
                        std::optional<std::size_t> external_ualg = std::nullopt);

// zero-vector stabilization applied `times` times
SeifertForm stabilize_zero(const SeifertForm& f, std::size_t times);

} // namespace seifert
