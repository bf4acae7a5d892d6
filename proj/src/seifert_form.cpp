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

#include <seifert/seifert_form.hpp>

namespace seifert {

SeifertForm SeifertForm::validate(IntMatrix M, std::size_t components) {
    if (!M.square()) throw ValidationError(ValidationKind::NotSquare, "Seifert matrix must be square");
    if (components < 1) throw ValidationError(ValidationKind::Components, "component count must be at least 1");
    const std::size_t n = M.rows();
    if (n + 1 < components || (n + 1 - components) % 2 != 0)
        throw ValidationError(ValidationKind::Parity, "dimension - components + 1 must be even and nonnegative");
    const IntMatrix A = antisymmetrize(M);
    const auto d = smith_normal_form(A).diagonal();
    std::size_t zeros = 0;
    bool unimodular = true;
    for (const auto& x : d) {
        if (x == 0) ++zeros;
        else if (x != 1) unimodular = false;
    }
    if (zeros != components - 1)
        throw ValidationError(ValidationKind::RadicalRank,
                              "radical of M - M^T has rank " + std::to_string(zeros) + ", expected " +
                                  std::to_string(components - 1));
    if (!unimodular)
        throw ValidationError(ValidationKind::NotUnimodular, "M - M^T is not unimodular modulo its radical");
    return SeifertForm(std::move(M), components, (n + 1 - components) / 2);
}

LaurentPoly alexander_polynomial_raw(const SeifertForm& f) {
    return det_laurent(alexander_matrix(f.matrix())).shifted(-static_cast<long>(f.genus()));
}

LaurentPoly alexander_polynomial(const SeifertForm& f) { return alexander_polynomial_raw(f).canonical(); }

SignatureNullity signature_and_nullity(const SeifertForm& f) {
    const Inertia in = inertia(symmetrize(f.matrix()));
    return {static_cast<long>(in.positive) - static_cast<long>(in.negative), in.zero};
}

long classical_lower_bounds(const SeifertForm& f, std::size_t r2) {
    const auto sn = signature_and_nullity(f);
    const long links = static_cast<long>(f.components()) - 1;
    const long first = std::labs(sn.signature) + static_cast<long>(sn.nullity) - links;
    // mod-p rank count: coker(M + M^T) needs at most 2g + r - 1 - 2d generators
    return std::max({first, static_cast<long>(r2) - links, 0L});
}

InvariantSet compute_invariants(const SeifertForm& f, std::size_t r2) {
    InvariantSet s;
    s.alexander = alexander_polynomial(f);
    const auto sn = signature_and_nullity(f);
    s.signature = sn.signature;
    s.nullity = sn.nullity;
    s.breadth = s.alexander.is_zero() ? 0 : s.alexander.breadth();
    s.lower_bound_twice_galg = classical_lower_bounds(f, r2);
    return s;
}

} // namespace seifert
