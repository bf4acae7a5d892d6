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

// Independent reference implementations used only by the tests. They avoid
// the library's elimination code paths: determinants by cofactor expansion,
// invariant factors by determinantal divisors, ranks over Q by plain Gauss.

#include <seifert/laurent.hpp>

#include <gmpxx.h>

#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using seifert::IntMatrix;
using seifert::Integer;
using seifert::LaurentMatrix;
using seifert::LaurentPoly;

template <typename T>
seifert::Matrix<T> minor_of(const seifert::Matrix<T>& M, std::size_t row, std::size_t col) {
    const std::size_t n = M.rows();
    seifert::Matrix<T> R(n - 1, n - 1);
    for (std::size_t i = 0, ri = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < n; ++j) {
            if (j == col) continue;
            R(ri, rj++) = M(i, j);
        }
        ++ri;
    }
    return R;
}

template <typename T>
T cofactor_det(const seifert::Matrix<T>& M) {
    const std::size_t n = M.rows();
    if (n == 0) return T(1);
    if (n == 1) return M(0, 0);
    T s(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (M(0, j) == T(0)) continue;
        T term = M(0, j) * cofactor_det(minor_of(M, 0, j));
        if (j % 2) s = s - term;
        else s = s + term;
    }
    return s;
}

// subsets of {0..n-1} of size k
inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// gcd of all k x k minors
inline Integer determinantal_divisor(const IntMatrix& M, std::size_t k) {
    Integer g = 0;
    subsets(M.rows(), k, [&](const std::vector<std::size_t>& rs) {
        subsets(M.cols(), k, [&](const std::vector<std::size_t>& cs) {
            IntMatrix S(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) S(i, j) = M(rs[i], cs[j]);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(cofactor_det(S)).get_mpz_t());
        });
    });
    return g;
}

// full diagonal d_1 | d_2 | ... of length min(rows, cols), zeros last
inline std::vector<Integer> invariant_factors(const IntMatrix& M) {
    const std::size_t m = std::min(M.rows(), M.cols());
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        const Integer d = determinantal_divisor(M, k);
        if (d == 0) {
            out.resize(m, Integer(0));
            break;
        }
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

// non-unit factors, zeros for the free part: the cokernel description
inline std::vector<Integer> cokernel_factors(const IntMatrix& M) {
    std::vector<Integer> out;
    for (const auto& d : invariant_factors(M))
        if (d != 1) out.push_back(d);
    for (std::size_t i = std::min(M.rows(), M.cols()); i < M.rows(); ++i) out.push_back(0);
    return out;
}

inline std::size_t rational_rank(const IntMatrix& M) {
    std::vector<std::vector<mpq_class>> a(M.rows(), std::vector<mpq_class>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = M(i, j);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
        std::size_t p = rank;
        while (p < M.rows() && a[p][c] == 0) ++p;
        if (p == M.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < M.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// characteristic polynomial by cofactor expansion; the roots of a symmetric
// matrix are real, so Descartes' rule of signs counts them exactly
inline std::vector<Integer> charpoly_cofactor(const IntMatrix& S) {
    const std::size_t n = S.rows();
    LaurentMatrix L(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            L(i, j) = (i == j ? LaurentPoly::t() : LaurentPoly()) - LaurentPoly(S(i, j));
    const LaurentPoly p = cofactor_det(L);
    std::vector<Integer> c(n + 1, Integer(0));
    for (long e = p.low(); e <= p.high(); ++e) c[static_cast<std::size_t>(e)] = p.coefficient(e);
    return c;
}

inline long symmetric_signature(const IntMatrix& S) {
    auto c = charpoly_cofactor(S);  // ascending
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0) ++zeros;
    auto changes = [](const std::vector<Integer>& v) {
        long n = 0;
        int last = 0;
        for (const auto& x : v) {
            const int s = sgn(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++n;
            last = s;
        }
        return n;
    };
    std::vector<Integer> pos(c.begin() + static_cast<long>(zeros), c.end()), neg = pos;
    for (std::size_t i = 0; i < neg.size(); ++i)
        if ((i + zeros) % 2) neg[i] = -neg[i];
    return changes(pos) - changes(neg);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(n, n);
    for (auto& x : M.data()) x = d(rng);
    return M;
}

inline bool is_knot_form(const IntMatrix& M) {
    const IntMatrix A = M - M.transpose();
    return abs(cofactor_det(A)) == 1;
}

// rejection sampling of det(M - M^T) = 1, entries in [lo, hi]
inline IntMatrix random_knot_form(std::mt19937_64& rng, std::size_t n, int lo = -2, int hi = 2) {
    while (true) {
        IntMatrix M = random_matrix(rng, n, lo, hi);
        if (is_knot_form(M)) return M;
    }
}

// restriction [[a,b],[c,d]] is Alexander-trivial iff det(tB - B^T) is a unit;
// expanding gives (ad-bc) t^2 + (b^2 + c^2 - 2ad) t + (ad-bc)
inline bool alexander_trivial_2x2(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    return a * d == b * c && abs(b * b + c * c - 2 * a * d) == 1;
}

inline Integer gcd_2x2_minors(const IntMatrix& X) {
    Integer g = 0;
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = i + 1; j < X.rows(); ++j) {
            const Integer m = X(i, 0) * X(j, 1) - X(j, 0) * X(i, 1);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    return g;
}

/*
 * Rank-2 summands of Z^n in row Hermite normal form: pivot columns p < q,
 * positive pivots up to `bound`, entries above a pivot reduced modulo it,
 * remaining entries in [-bound, bound]. Calls fn with the n x 2 basis.
 */
inline void rank2_summands(std::size_t n, int bound, const std::function<bool(const IntMatrix&)>& fn) {
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            // free entries: row 0 at columns > p except q; row 1 at columns > q
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t j = p + 1; j < n; ++j)
                if (j != q) free.emplace_back(0, j);
            for (std::size_t j = q + 1; j < n; ++j) free.emplace_back(1, j);
            for (int a = 1; a <= bound; ++a)
                for (int b = 1; b <= bound; ++b)
                    for (int above = 0; above < b; ++above) {
                        std::vector<int> v(free.size(), -bound);
                        while (true) {
                            IntMatrix X(n, 2);
                            X(p, 0) = a;
                            X(q, 1) = b;
                            X(q, 0) = above;
                            for (std::size_t k = 0; k < free.size(); ++k)
                                X(free[k].second, free[k].first) = v[k];
                            if (gcd_2x2_minors(X) == 1 && !fn(X)) return;
                            std::size_t k = 0;
                            while (k < v.size() && v[k] == bound) v[k++] = -bound;
                            if (k == v.size()) break;
                            ++v[k];
                        }
                    }
        }
}

// maximal Alexander-trivial rank of a 2x2 or 4x4 knot form, rank-2 summands
// enumerated with HNF entries bounded by `bound`
inline std::size_t max_alexander_trivial_rank(const IntMatrix& M, int bound = 2) {
    const std::size_t n = M.rows();
    // whole lattice: Delta a unit, from the cofactor determinant of tM - M^T
    LaurentMatrix L(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) L(i, j) = LaurentPoly::t() * LaurentPoly(M(i, j)) - LaurentPoly(M(j, i));
    if (cofactor_det(L).is_unit()) return n;
    if (n < 4) return 0;
    bool found = false;
    rank2_summands(n, bound, [&](const IntMatrix& X) {
        const IntMatrix B = X.transpose() * M * X;
        if (alexander_trivial_2x2(B(0, 0), B(0, 1), B(1, 0), B(1, 1))) found = true;
        return !found;
    });
    return found ? 2 : 0;
}

} // namespace oracle
