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

#include <seifert/linalg.hpp>

#include <sstream>

namespace seifert {

const char* to_string(ValidationKind kind) {
    switch (kind) {
    case ValidationKind::NotSquare: return "not-square";
    case ValidationKind::Components: return "bad-component-count";
    case ValidationKind::Parity: return "parity";
    case ValidationKind::RadicalRank: return "radical-rank";
    case ValidationKind::NotUnimodular: return "antisymmetric-not-unimodular";
    }
    return "unknown";
}

std::string to_string(const IntMatrix& M) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) os << ',';
            os << M(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<std::vector<long>> to_int64_rows(const IntMatrix& M) {
    std::vector<std::vector<long>> out(M.rows(), std::vector<long>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (!M(i, j).fits_slong_p()) throw DimensionError("entry exceeds 64 bits");
            out[i][j] = M(i, j).get_si();
        }
    return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer determinant(const IntMatrix& M) {
    if (!M.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A(p, k) == 0) ++p;
            if (p == n) return 0;
            A.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                mpz_divexact(A(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            A(i, k) = 0;
        }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& M) {
    IntMatrix A = M;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c) == 0) ++p;
        if (p == A.rows()) continue;
        A.swap_rows(r, p);
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            if (A(i, c) == 0) continue;
            Integer a = A(r, c), b = A(i, c), g = 0;
            for (std::size_t j = c; j < A.cols(); ++j) {
                A(i, j) = a * A(i, j) - b * A(r, j);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), A(i, j).get_mpz_t());
            }
            if (g > 1)
                for (std::size_t j = c; j < A.cols(); ++j) mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(), g.get_mpz_t());
        }
        ++r;
    }
    return r;
}

std::vector<Integer> SnfDecomposition::diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

// row_dst += q * row_src on both D and U
void add_row(IntMatrix& D, IntMatrix& U, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(dst, j) += q * D(src, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += q * U(src, j);
}

void add_col(IntMatrix& D, IntMatrix& V, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, dst) += q * D(i, src);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) += q * V(i, src);
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows(), n = M.cols();
    IntMatrix D = M, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        bool done = false;
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) {
                done = true;
                break;
            }
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row(D, U, i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                add_col(D, V, j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // the pivot must divide the whole trailing block
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            add_row(D, U, t, bad, 1);
        }
        if (done) break;
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
        }
    }
    return {std::move(U), std::move(D), std::move(V)};
}

std::vector<Integer> nonunit_invariant_factors(const IntMatrix& M) {
    auto d = smith_normal_form(M).diagonal();
    std::vector<Integer> out;
    for (const auto& x : d)
        if (x != 1 && x != 0) out.push_back(x);
    // rows beyond the diagonal contribute free summands
    std::size_t zeros = M.rows() - (d.size() - std::count(d.begin(), d.end(), Integer(0)));
    for (std::size_t k = 0; k < zeros; ++k) out.emplace_back(0);
    return out;
}

Inertia inertia(const IntMatrix& S) {
    if (!S.square() || S != S.transpose()) throw ContractError("signature of a non-symmetric matrix");
    const std::size_t n = S.rows();
    Matrix<mpq_class> A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = S(i, j);
    Inertia in;
    for (std::size_t k = 0; k < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && A(j, j) == 0) ++j;
            if (j < n) {
                A.swap_rows(k, j);
                A.swap_cols(k, j);
            } else {
                j = k + 1;
                while (j < n && A(k, j) == 0) ++j;
                if (j == n) {
                    ++in.zero;
                    continue;
                }
                // e_k -> e_k + e_j gives diagonal 2 A(k,j)
                for (std::size_t c = 0; c < n; ++c) A(k, c) += A(j, c);
                for (std::size_t r = 0; r < n; ++r) A(r, k) += A(r, j);
            }
        }
        const mpq_class p = A(k, k);
        (p > 0 ? in.positive : in.negative)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (A(i, k) == 0) continue;
            const mpq_class f = A(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) A(i, k) = A(k, i) = 0;
        // keep the trailing block exactly symmetric
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) A(j, i) = A(i, j);
    }
    return in;
}

long signature_symmetric(const IntMatrix& S) {
    Inertia in = inertia(S);
    return static_cast<long>(in.positive) - static_cast<long>(in.negative);
}

std::size_t radical_rank(const IntMatrix& S) {
    if (!S.square()) throw DimensionError("radical of a non-square matrix");
    return S.rows() - rank(S);
}

IntMatrix apply_congruence(const IntMatrix& M, const IntMatrix& T) {
    if (!M.square() || M.rows() != T.rows()) throw DimensionError("congruence dimension mismatch");
    return T.transpose() * M * T;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& A, const IntMatrix& b) {
    if (b.cols() != 1 || b.rows() != A.rows()) throw DimensionError("right-hand side shape");
    const auto snf = smith_normal_form(A);
    const IntMatrix c = snf.U * b;
    IntMatrix z(A.cols(), 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        const bool on_diag = i < A.cols();
        const Integer d = on_diag ? snf.D(i, i) : Integer(0);
        if (d == 0) {
            if (c(i, 0) != 0) return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(c(i, 0).get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        mpz_divexact(z(i, 0).get_mpz_t(), c(i, 0).get_mpz_t(), d.get_mpz_t());
    }
    return snf.V * z;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    const auto snf = smith_normal_form(A);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (j >= A.rows() || snf.D(j, j) == 0) idx.push_back(j);
    return snf.V.select_columns(idx);
}

IntMatrix inverse_unimodular(const IntMatrix& M) {
    if (!M.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = M.rows();
    Matrix<mpq_class> A(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = M(i, j);
        A(i, n + i) = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && A(p, k) == 0) ++p;
        if (p == n) throw NotUnimodular();
        A.swap_rows(k, p);
        const mpq_class piv = A(k, k);
        for (std::size_t j = 0; j < 2 * n; ++j) A(k, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || A(i, k) == 0) continue;
            const mpq_class f = A(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) A(i, j) -= f * A(k, j);
        }
    }
    IntMatrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& q = A(i, n + j);
            if (q.get_den() != 1) throw NotUnimodular();
            R(i, j) = q.get_num();
        }
    return R;
}

bool is_summand(const IntMatrix& columns) {
    if (columns.cols() > columns.rows()) return false;
    for (const auto& d : smith_normal_form(columns).diagonal())
        if (d != 1) return false;
    return true;
}

IntMatrix complete_to_unimodular(const IntMatrix& columns) {
    const std::size_t n = columns.rows(), k = columns.cols();
    const auto snf = smith_normal_form(columns);
    for (const auto& d : snf.diagonal())
        if (d != 1) throw ContractError("columns do not span a direct summand");
    const IntMatrix Uinv = inverse_unimodular(snf.U);
    return hstack(columns, Uinv.block(0, k, n, n - k));
}

IntMatrix symmetrize(const IntMatrix& M) { return M + M.transpose(); }
IntMatrix antisymmetrize(const IntMatrix& M) { return M - M.transpose(); }

} // namespace seifert
