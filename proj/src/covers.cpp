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

namespace seifert {

bool is_prime_power(long d) {
    if (d < 2) return false;
    long p = 2;
    while (p * p <= d && d % p != 0) ++p;
    if (d % p != 0) return true;  // d itself is prime
    while (d % p == 0) d /= p;
    return d == 1;
}

IntMatrix cover_presentation(const SeifertForm& f, long d) {
    if (!f.is_knot()) throw KnotsOnlyError();
    if (d < 2) throw ContractError("cover degree must be at least 2");
    const IntMatrix& M = f.matrix();
    const IntMatrix P = inverse_unimodular(M.transpose() - M) * M.transpose();
    const IntMatrix I = IntMatrix::identity(M.rows());
    const IntMatrix Q = P - I;
    IntMatrix Pd = I, Qd = I;
    for (long k = 0; k < d; ++k) {
        Pd = Pd * P;
        Qd = Qd * Q;
    }
    return Pd - Qd;
}

CoverHomology homology_structure(const SeifertForm& f, long d) {
    CoverHomology h;
    h.degree = d;
    if (f.is_knot()) h.presentation = cover_presentation(f, d);
    else if (d == 2) h.presentation = symmetrize(f.matrix());
    else throw KnotsOnlyError();
    h.invariant_factors = nonunit_invariant_factors(h.presentation);
    h.rank = h.invariant_factors.size();
    Integer order = 1;
    bool finite = true;
    for (const auto& x : h.invariant_factors) {
        if (x == 0) finite = false;
        else order *= x;
    }
    if (finite) h.order = order;
    return h;
}

CoverGenusBound cg_genus_lower_bound(const SeifertForm& f, long d_max) {
    if (d_max < 2) throw ContractError("d_max must be at least 2");
    const LaurentPoly delta = alexander_polynomial(f);
    const long half_breadth = delta.is_zero() ? 0 : static_cast<long>(delta.breadth()) / 2;
    const long top = std::min(d_max, std::max(2L, half_breadth));
    CoverGenusBound best;
    for (long d = 2; d <= top; ++d) {
        if (!is_prime_power(d)) continue;
        const std::size_t rd = homology_structure(f, d).rank;
        const std::size_t denom = 2 * static_cast<std::size_t>(d - 1);
        const std::size_t b = (rd + denom - 1) / denom;
        if (b > best.bound) {
            best.bound = b;
            best.witness = d;
        }
    }
    return best;
}

} // namespace seifert
