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

#include <mpfr.h>

#include <numeric>

namespace seifert {

namespace {

using Poly = std::vector<Integer>;  // ascending coefficients

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient of a by b when b is monic and divides a
Poly divide_monic(Poly a, const Poly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    Poly q(a.size() - db, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = a[k + db];
        for (std::size_t i = 0; i <= db; ++i) a[k + i] -= q[k] * b[i];
    }
    return q;
}

// Z[w] = Z[x]/Phi_d with elements stored in the power basis 1, w, ..., w^(deg-1)
class CyclotomicRing {
public:
    explicit CyclotomicRing(long d) : d_(d), phi_(cyclotomic_polynomial(d)), deg_(phi_.size() - 1) {}

    using Elem = Poly;

    std::size_t degree() const { return deg_; }
    Elem zero() const { return Elem(deg_, Integer(0)); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }

    Elem reduce(Poly p) const {
        for (std::size_t k = p.size(); k-- > deg_;) {
            if (p[k] == 0) continue;
            const Integer c = p[k];
            for (std::size_t i = 0; i <= deg_; ++i) p[k - deg_ + i] -= c * phi_[i];
        }
        p.resize(deg_, Integer(0));
        return p;
    }

    // w^m for any integer m
    Elem power(long m) const {
        m %= d_;
        if (m < 0) m += d_;
        Poly p(static_cast<std::size_t>(m) + 1, Integer(0));
        p[m] = 1;
        return reduce(std::move(p));
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (std::size_t i = 0; i < deg_; ++i) r[i] += b[i];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (std::size_t i = 0; i < deg_; ++i) r[i] -= b[i];
        return r;
    }
    Elem scale(const Integer& c, const Elem& a) const {
        Elem r = a;
        for (auto& x : r) x *= c;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Poly p(2 * deg_ - 1, Integer(0));
        for (std::size_t i = 0; i < deg_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j) p[i + j] += a[i] * b[j];
        }
        return reduce(std::move(p));
    }
    static bool is_zero(const Elem& a) {
        return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
    }

private:
    long d_;
    Poly phi_;
    std::size_t deg_;
};

using Elem = CyclotomicRing::Elem;

// coefficients of det(x I - A), leading first, division-free
std::vector<Elem> berkowitz(const CyclotomicRing& R, const Matrix<Elem>& A) {
    const std::size_t n = A.rows();
    std::vector<Elem> C{R.one()};
    if (n == 0) return C;
    C.push_back(R.sub(R.zero(), A(0, 0)));
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Elem> col(r + 2, R.zero());
        col[0] = R.one();
        col[1] = R.sub(R.zero(), A(r, r));
        std::vector<Elem> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = A(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            Elem s = R.zero();
            for (std::size_t i = 0; i < r; ++i) s = R.add(s, R.mul(A(r, i), v[i]));
            col[k] = R.sub(R.zero(), s);
            if (k == r + 1) break;
            std::vector<Elem> w(r, R.zero());
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) w[i] = R.add(w[i], R.mul(A(i, j), v[j]));
            v = std::move(w);
        }
        std::vector<Elem> next(r + 2, R.zero());
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t k = 0; k <= std::min(i, r); ++k) next[i] = R.add(next[i], R.mul(col[i - k], C[k]));
        C = std::move(next);
    }
    return C;
}

// sign of Re(sum a_m w^m) for w = exp(2 pi i j/d); exact because a nonzero
// element has nonzero value, and the interval is refined until it excludes 0
int real_sign(const Elem& a, long j, long d) {
    if (CyclotomicRing::is_zero(a)) return 0;
    Integer l1 = 0;
    for (const auto& c : a) l1 += abs(c);
    for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
        mpfr_t pi, x, c, term, sum, bound;
        mpfr_inits2(prec, pi, x, c, term, sum, bound, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(pi, MPFR_RNDN);
        mpfr_set_zero(sum, 1);
        for (std::size_t m = 0; m < a.size(); ++m) {
            if (a[m] == 0) continue;
            const long k = static_cast<long>((static_cast<long long>(j) * static_cast<long long>(m)) % d);
            mpfr_mul_si(x, pi, 2 * k, MPFR_RNDN);
            mpfr_div_si(x, x, d, MPFR_RNDN);
            mpfr_cos(c, x, MPFR_RNDN);
            mpfr_mul_z(term, c, a[m].get_mpz_t(), MPFR_RNDN);
            mpfr_add(sum, sum, term, MPFR_RNDN);
        }
        // each cosine is off by at most 2^(6-prec); products and sums add
        // at most one rounding each relative to the l1 norm
        mpfr_set_z(bound, l1.get_mpz_t(), MPFR_RNDU);
        mpfr_mul_ui(bound, bound, 256 + 2 * a.size(), MPFR_RNDU);
        mpfr_div_2si(bound, bound, prec, MPFR_RNDU);
        mpfr_abs(term, sum, MPFR_RNDN);
        const bool decided = mpfr_cmp(term, bound) > 0;
        const int s = mpfr_sgn(sum);
        mpfr_clears(pi, x, c, term, sum, bound, static_cast<mpfr_ptr>(nullptr));
        if (decided) return s > 0 ? 1 : -1;
    }
    throw InternalConsistencyError("sign of a nonzero cyclotomic integer could not be resolved");
}

int sign_changes(const std::vector<int>& s) {
    int changes = 0, last = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (last != 0 && x != last) ++changes;
        last = x;
    }
    return changes;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(long d) {
    if (d < 1) throw ContractError("cyclotomic index must be positive");
    Poly p(static_cast<std::size_t>(d) + 1, Integer(0));
    p[0] = -1;
    p[d] = 1;
    for (long e = 1; e < d; ++e)
        if (d % e == 0) p = divide_monic(p, cyclotomic_polynomial(e));
    return p;
}

long levine_tristram(const SeifertForm& f, long j, long d) {
    if (!(0 < j && j < d)) throw ContractError("need 0 < j < d");
    const long g = std::gcd(j, d);
    j /= g;
    d /= g;
    const CyclotomicRing R(d);

    // w is a root of det(tM - M^T) exactly when Phi_d divides it
    const LaurentPoly delta = det_laurent(alexander_matrix(f.matrix()));
    Poly dp;
    if (!delta.is_zero()) {
        dp.assign(static_cast<std::size_t>(delta.low()), Integer(0));
        dp.insert(dp.end(), delta.coefficients().begin(), delta.coefficients().end());
    }
    if (CyclotomicRing::is_zero(R.reduce(dp))) throw SingularAtOmega();

    // entries of H in the basis of powers of x = exp(2 pi i/d); w = x^j
    const IntMatrix& M = f.matrix();
    const std::size_t n = M.rows();
    const Elem one_minus_w = R.sub(R.one(), R.power(j));
    const Elem one_minus_wbar = R.sub(R.one(), R.power(-j));
    Matrix<Elem> H(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            H(a, b) = R.add(R.scale(M(a, b), one_minus_w), R.scale(M(b, a), one_minus_wbar));

    const auto coeffs = berkowitz(R, H);
    std::vector<int> pos(coeffs.size()), neg(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        // sign evaluation uses x = exp(2 pi i/d), so the exponent multiplier is 1
        pos[k] = real_sign(coeffs[k], 1, d);
        const bool flip = ((n - k) % 2) == 1;
        neg[k] = flip ? -pos[k] : pos[k];
    }
    if (pos.back() == 0) throw SingularAtOmega();
    return sign_changes(pos) - sign_changes(neg);
}

} // namespace seifert
