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

#include <seifert/bounds.hpp>

#include <optional>

namespace seifert {

class HermitianLaurentMatrix {
public:
    HermitianLaurentMatrix() = default;
    // throws ContractError unless M equals its conjugate transpose
    explicit HermitianLaurentMatrix(LaurentMatrix M);

    const LaurentMatrix& matrix() const noexcept { return M_; }
    std::size_t size() const noexcept { return M_.rows(); }
    IntMatrix at_one() const { return evaluate_at_one(M_); }

private:
    LaurentMatrix M_;
};

bool is_hermitian(const LaurentMatrix& M);

// [[B, C + 1], [C^T, D]] with B, D symmetric and all blocks g x g
bool has_block_shape(const IntMatrix& V);

struct ShapedForm {
    IntMatrix matrix;     // in block shape
    IntMatrix transform;  // matrix = transform^T input transform, det = +-1
};

ShapedForm to_block_form(const SeifertForm& f);
// some diagonal entry of B odd afterwards; transform is relative to the input
ShapedForm make_block_odd(const IntMatrix& shaped);
HermitianLaurentMatrix blanchfield_matrix(const IntMatrix& shaped);

struct UalgCertificate {
    HermitianLaurentMatrix W4;
    IntMatrix W4_at_1;
    bool odd = false;
    bool indefinite = false;
    bool unimodular = false;

    // intermediate objects, kept for re-checking
    IntMatrix basis;  // columns X, Y, E, F in the coordinates of the form
    LaurentMatrix W1;
    LaurentMatrix T;
    LaurentMatrix W2;
    LaurentPoly det_T;
    LaurentPoly det_W3;
    IntMatrix B_block;  // odd B block of the complement

    std::size_t certified_bound() const noexcept { return W4.size(); }
    // an empty W4 is vacuously diagonal
    bool certified() const noexcept { return W4.size() == 0 || (odd && indefinite && unimodular); }
};

UalgCertificate reduce_to_W4(const SeifertForm& f, const SubgroupCertificate& cert);

// the sufficient criterion: odd, indefinite and unimodular
bool check_diagonalizable_at_1(const IntMatrix& S);

struct UalgBounds {
    BoundReport report;
    std::optional<UalgCertificate> certificate;
    std::string reduction_failure;  // why no certificate was produced, if none was
};

UalgBounds ualg_bounds(const SeifertForm& f, const BoundReport& galg, std::optional<std::size_t> external_ualg);

} // namespace seifert
