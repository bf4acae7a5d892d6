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

#include <seifert/certificates.hpp>

#include <cstdint>

namespace seifert {

struct SearchBudget {
    int coefficient_cap = 3;          // entries of enumerated vectors lie in [-cap, cap]
    int stabilization_depth = 2;
    std::size_t subset_dim_cap = 14;  // exhaustive standard-basis subsets up to this dimension
    std::uint64_t max_nodes = 4'000'000;
    std::size_t random_trials = 32;
    std::uint64_t seed = 0x5EED5EEDULL;
};

struct SearchResult {
    SubgroupCertificate best;
    std::size_t rank_cap = 0;       // no subgroup of the searched kind can exceed this rank
    bool budget_exhausted = false;  // the node budget ran out before the search space did
    std::uint64_t nodes = 0;

    bool proven_maximal() const noexcept { return best.rank() == rank_cap; }
};

// rank_cap: pass a known upper bound on the Alexander-trivial rank, or leave
// it empty to derive one from signature, nullity and r2 of the form
SearchResult search_alexander_trivial(const SeifertForm& f, const SearchBudget& budget,
                                      std::optional<std::size_t> rank_cap = std::nullopt);
SearchResult search_isotropic(const SeifertForm& f, const SearchBudget& budget);

// reduced basis (columns) of the lattice they span, exact rational LLL with delta = 3/4
IntMatrix lll_reduce(const IntMatrix& basis);

} // namespace seifert
