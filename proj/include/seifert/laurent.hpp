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

#include <string>
#include <vector>

namespace seifert {

/*
 * Element of Z[t, t^-1]. Stored as the lowest exponent plus a dense
 * coefficient vector whose first and last entries are nonzero; the zero
 * polynomial has no coefficients and lowest exponent 0.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Integer(c)) {}
    LaurentPoly(const Integer& c);
    LaurentPoly(long low, std::vector<Integer> coeffs);

    static LaurentPoly monomial(const Integer& c, long exponent);
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long low() const noexcept { return low_; }
    long high() const noexcept { return low_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    Integer coefficient(long exponent) const;

    // t -> t^-1
    LaurentPoly involute() const;
    // multiply by t^k
    LaurentPoly shifted(long k) const;
    bool is_unit() const;
    // highest minus lowest exponent; throws on zero
    std::size_t breadth() const;
    bool is_palindromic() const;

    // value at t = +1 or t = -1
    Integer at_one() const;
    Integer at_minus_one() const;

    // the representative among +-t^k p with exponents centred on zero
    // (lowest exponent -floor(breadth/2)) and positive leading coefficient
    LaurentPoly canonical() const;

    std::string to_string() const;

    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    void normalize();

    long low_ = 0;
    std::vector<Integer> coeffs_;
};

// exact quotient a / b; throws ContractError when b does not divide a
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

using LaurentMatrix = Matrix<LaurentPoly>;

LaurentMatrix to_laurent(const IntMatrix& M);
// t M - M^T
LaurentMatrix alexander_matrix(const IntMatrix& M);
LaurentPoly det_laurent(const LaurentMatrix& M);
LaurentMatrix conjugate_transpose(const LaurentMatrix& M);
IntMatrix evaluate_at_one(const LaurentMatrix& M);
// inverse of a matrix whose determinant is a unit, via the adjugate
LaurentMatrix inverse_unit_det(const LaurentMatrix& M);

} // namespace seifert
