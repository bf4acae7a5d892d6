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

#include <seifert/laurent.hpp>

#include <sstream>

namespace seifert {

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(long low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) { return LaurentPoly(exponent, {c}); }

void LaurentPoly::normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<Integer>(coeffs_.begin() + first, coeffs_.begin() + last);
        low_ += static_cast<long>(first);
    }
}

Integer LaurentPoly::coefficient(long exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[exponent - low_];
}

LaurentPoly LaurentPoly::involute() const {
    if (is_zero()) return {};
    return LaurentPoly(-high(), std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

bool LaurentPoly::is_unit() const { return coeffs_.size() == 1 && abs(coeffs_[0]) == 1; }

std::size_t LaurentPoly::breadth() const {
    if (is_zero()) throw ContractError("breadth of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

bool LaurentPoly::is_palindromic() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

Integer LaurentPoly::at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

Integer LaurentPoly::at_minus_one() const {
    Integer s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const bool odd = ((low_ + static_cast<long>(i)) % 2) != 0;
        if (odd) s -= coeffs_[i];
        else s += coeffs_[i];
    }
    return s;
}

LaurentPoly LaurentPoly::canonical() const {
    if (is_zero()) return {};
    const long b = static_cast<long>(breadth());
    LaurentPoly r(-(b / 2), coeffs_);
    if (r.coeffs_.back() < 0) r = -r;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = high(); e >= low_; --e) {
        const Integer& c = coeffs_[e - low_];
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0 || a != 1) os << a.get_str();
        if (e != 0) {
            os << 't';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    if (q.is_zero()) return *this;
    if (is_zero()) return *this = q;
    const long lo = std::min(low_, q.low_), hi = std::max(high(), q.high());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[low_ - lo + i] += coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[q.low_ - lo + i] += q.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += -q; }

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ContractError("division by the zero polynomial");
    if (a.is_zero()) return {};
    // both sides have nonzero constant terms after shifting, so ordinary
    // polynomial long division decides exactness
    std::vector<Integer> rem = a.coefficients();
    const auto& d = b.coefficients();
    if (rem.size() < d.size()) throw ContractError("inexact Laurent division");
    std::vector<Integer> q(rem.size() - d.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) throw ContractError("inexact Laurent division");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q[k] * d[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw ContractError("inexact Laurent division");
    return LaurentPoly(a.low() - b.low(), std::move(q));
}

LaurentMatrix to_laurent(const IntMatrix& M) {
    return M.map([](const Integer& x) { return LaurentPoly(x); });
}

LaurentMatrix alexander_matrix(const IntMatrix& M) {
    if (!M.square()) throw DimensionError("Alexander matrix of a non-square matrix");
    LaurentMatrix R(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            R(i, j) = LaurentPoly(0, {-M(j, i), M(i, j)});
    return R;
}

LaurentPoly det_laurent(const LaurentMatrix& M) {
    if (!M.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    LaurentMatrix A = M;
    LaurentPoly prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && A(p, k).is_zero()) ++p;
            if (p == n) return {};
            A.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                A(i, j) = exact_divide(A(i, j) * A(k, k) - A(i, k) * A(k, j), prev);
            A(i, k) = LaurentPoly();
        }
        prev = A(k, k);
    }
    return negate ? -A(n - 1, n - 1) : A(n - 1, n - 1);
}

LaurentMatrix conjugate_transpose(const LaurentMatrix& M) {
    return M.transpose().map([](const LaurentPoly& p) { return p.involute(); });
}

IntMatrix evaluate_at_one(const LaurentMatrix& M) {
    return M.map([](const LaurentPoly& p) { return p.at_one(); });
}

LaurentMatrix inverse_unit_det(const LaurentMatrix& M) {
    if (!M.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = M.rows();
    const LaurentPoly det = det_laurent(M);
    if (!det.is_unit()) throw ContractError("matrix determinant is not a unit");
    const LaurentPoly det_inv = LaurentPoly::monomial(det.coefficients()[0], -det.low());
    LaurentMatrix R(n, n);
    if (n == 1) {
        R(0, 0) = det_inv;
        return R;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentMatrix minor(n - 1, n - 1);
            for (std::size_t a = 0, ra = 0; a < n; ++a) {
                if (a == j) continue;
                for (std::size_t b = 0, cb = 0; b < n; ++b) {
                    if (b == i) continue;
                    minor(ra, cb++) = M(a, b);
                }
                ++ra;
            }
            LaurentPoly c = det_laurent(minor) * det_inv;
            R(i, j) = ((i + j) % 2) ? -c : c;
        }
    return R;
}

} // namespace seifert
