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
#include <seifert/search.hpp>

#include <numeric>
#include <random>

namespace seifert {

IntMatrix lll_reduce(const IntMatrix& basis) {
    const std::size_t n = basis.rows(), m = basis.cols();
    if (m <= 1) return basis;
    std::vector<std::vector<mpq_class>> b(m, std::vector<mpq_class>(n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) b[j][i] = basis(i, j);

    std::vector<std::vector<mpq_class>> bs(m, std::vector<mpq_class>(n));
    std::vector<std::vector<mpq_class>> mu(m, std::vector<mpq_class>(m));
    std::vector<mpq_class> Bn(m);
    auto dot = [n](const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < n; ++i) s += u[i] * v[i];
        return s;
    };
    auto gram_schmidt = [&] {
        for (std::size_t i = 0; i < m; ++i) {
            bs[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], bs[j]) / Bn[j];
                for (std::size_t t = 0; t < n; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
            }
            Bn[i] = dot(bs[i], bs[i]);
            if (Bn[i] == 0) throw ContractError("LLL input columns are linearly dependent");
        }
    };
    gram_schmidt();
    const mpq_class delta(3, 4);
    std::size_t k = 1;
    while (k < m) {
        for (std::size_t j = k; j-- > 0;) {
            mpq_class half = mu[k][j] + mpq_class(1, 2);
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
            if (q == 0) continue;
            for (std::size_t t = 0; t < n; ++t) b[k][t] -= q * b[j][t];
            for (std::size_t l = 0; l < j; ++l) mu[k][l] -= q * mu[j][l];
            mu[k][j] -= q;
        }
        if (Bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * Bn[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    IntMatrix R(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) R(i, j) = b[j][i].get_num();
    return R;
}

namespace {

using Vec = std::vector<long>;

constexpr long kEntryLimit = 1L << 24;

bool fits(const IntMatrix& M) {
    for (const auto& x : M.data())
        if (abs(x) >= kEntryLimit) return false;
    return true;
}

std::vector<Vec> columns64(const IntMatrix& B) {
    std::vector<Vec> cols(B.cols(), Vec(B.rows()));
    for (std::size_t j = 0; j < B.cols(); ++j)
        for (std::size_t i = 0; i < B.rows(); ++i) cols[j][i] = B(i, j).get_si();
    return cols;
}

long gcd_vec(const Vec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

// visits vectors with entries in [-k, k], max-norm exactly k and first nonzero
// entry positive, for k = 1..cap; stops when visit returns false
template <typename F>
bool for_each_box_vector(std::size_t m, int cap, F visit) {
    Vec c(m);
    for (int k = 1; k <= cap; ++k) {
        std::fill(c.begin(), c.end(), -k);
        while (true) {
            bool has_k = false, positive_lead = false;
            for (long x : c) {
                if (x == k || x == -k) has_k = true;
            }
            for (long x : c)
                if (x != 0) {
                    positive_lead = x > 0;
                    break;
                }
            if (has_k && positive_lead && !visit(c)) return false;
            std::size_t i = 0;
            while (i < m && c[i] == k) c[i++] = -k;
            if (i == m) break;
            ++c[i];
        }
    }
    return true;
}

// the sublattice of coefficient vectors z with a.z = 1, b.z = 0 is nonempty
bool pairing_solvable(const Vec& a, const Vec& b) {
    const long gb = gcd_vec(b);
    if (gb == 0) return gcd_vec(a) == 1;
    long minors = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const long mnr = a[i] * b[j] - a[j] * b[i];
            minors = std::gcd(minors, mnr < 0 ? -mnr : mnr);
        }
    return minors == gb;
}

class Searcher {
public:
    Searcher(const SeifertForm& f, const SearchBudget& budget, SubgroupKind kind, std::size_t cap)
        : f_(f), budget_(budget), kind_(kind), cap_(cap) {
        result_.rank_cap = cap;
        result_.best = verify(f, kind, IntMatrix(f.dim(), 0));
    }

    SearchResult run() {
        if (done()) return finish();
        subsets(f_.matrix(), IntMatrix::identity(f_.dim()));
        if (!done() && fits(f_.matrix())) {
            M64_ = to_int64_rows(f_.matrix());
            if (kind_ == SubgroupKind::AlexanderTrivial && result_.best.rank() == 0) pairs();
            if (!done()) {
                const IntMatrix I = IntMatrix::identity(f_.dim());
                std::vector<Vec> xs;
                dfs(xs, I);
            }
        }
        if (!done()) random_layer();
        return finish();
    }

private:
    bool done() const { return result_.best.rank() >= cap_ || result_.budget_exhausted; }

    SearchResult finish() {
        if (!result_.best.verified) throw InternalConsistencyError("search produced an unverified certificate");
        return result_;
    }

    bool spend() {
        if (result_.nodes >= budget_.max_nodes) {
            result_.budget_exhausted = true;
            return false;
        }
        ++result_.nodes;
        return true;
    }

    void offer(const IntMatrix& basis) {
        auto c = verify(f_, kind_, basis);
        if (!c.verified) return;
        const auto& cur = result_.best;
        if (c.rank() > cur.rank() || (c.rank() == cur.rank() && basis_less(c.basis, cur.basis)))
            result_.best = std::move(c);
    }

    long theta(const Vec& x, const Vec& y) const {
        long s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            long r = 0;
            for (std::size_t j = 0; j < y.size(); ++j) r += M64_[i][j] * y[j];
            s += x[i] * r;
        }
        return s;
    }

    // all subsets of the columns of T of the largest feasible size, on M' = T^T M T
    void subsets(const IntMatrix& M, const IntMatrix& T) {
        const std::size_t n = M.rows();
        if (n > budget_.subset_dim_cap) return;
        const IntMatrix Mp = apply_congruence(M, T);
        const bool at = kind_ == SubgroupKind::AlexanderTrivial;
        for (std::size_t s = std::min(cap_, n); s > result_.best.rank(); --s) {
            if (at && s % 2 != 0) continue;
            std::vector<std::size_t> idx(s);
            std::iota(idx.begin(), idx.end(), 0);
            bool found = false;
            while (true) {
                if (!spend()) return;
                const IntMatrix B = Mp.select_columns(idx);
                IntMatrix R(s, s);
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) R(i, j) = B(idx[i], j);
                bool candidate;
                if (at) {
                    candidate = abs(determinant(antisymmetrize(R))) == 1 && abs(determinant(symmetrize(R))) == 1 &&
                                determinant(R) == 0;
                } else {
                    candidate = R.is_zero();
                }
                if (candidate) {
                    const std::size_t before = result_.best.rank();
                    offer(T.select_columns(idx));
                    if (result_.best.rank() > before || result_.best.rank() == s) found = true;
                }
                std::size_t i = s;
                while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
            if (found) return;
        }
    }

    // rank 2 from pairs of box vectors: [[a,b],[c,d]] is Alexander-trivial iff ad = bc and |b - c| = 1
    void pairs() {
        const std::size_t n = f_.dim();
        if (cap_ < 2) return;
        int cap = budget_.coefficient_cap;
        auto count = [n](int c) {
            double v = 1;
            for (std::size_t i = 0; i < n; ++i) v *= 2 * c + 1;
            return v / 2;
        };
        while (cap > 0 && count(cap) * count(cap) > 4e7) --cap;
        if (cap == 0) return;
        std::vector<Vec> vs;
        for_each_box_vector(n, cap, [&](const Vec& v) {
            if (gcd_vec(v) == 1) vs.push_back(v);
            return true;
        });
        std::vector<long> q(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) q[i] = theta(vs[i], vs[i]);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!spend()) return;
                const long b = theta(vs[i], vs[j]), c = theta(vs[j], vs[i]);
                if (b - c != 1 && c - b != 1) continue;
                if (q[i] * q[j] != b * c) continue;
                IntMatrix B(n, 2);
                for (std::size_t t = 0; t < n; ++t) {
                    B(t, 0) = vs[i][t];
                    B(t, 1) = vs[j][t];
                }
                offer(B);
                if (done()) return;
            }
    }

    // y_j with theta(x_i, y_j) = delta_ij for i <= j and theta(y_j, x_i) = 0 for i <= j
    IntMatrix solve_partners(const std::vector<Vec>& xs) const {
        const std::size_t n = f_.dim(), k = xs.size();
        const IntMatrix& M = f_.matrix();
        IntMatrix X(n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) X(i, j) = xs[j][i];
        const IntMatrix XtM = X.transpose() * M, MX = (M * X).transpose();
        IntMatrix Y(n, k);
        for (std::size_t j = 0; j < k; ++j) {
            IntMatrix rows(2 * (j + 1), n), rhs(2 * (j + 1), 1);
            for (std::size_t i = 0; i <= j; ++i)
                for (std::size_t t = 0; t < n; ++t) {
                    rows(i, t) = XtM(i, t);
                    rows(j + 1 + i, t) = MX(i, t);
                }
            rhs(j, 0) = 1;
            const auto y = solve_integer(rows, rhs);
            if (!y) throw InternalConsistencyError("partner system unexpectedly unsolvable");
            Y.set_block(0, j, *y);
        }
        return hstack(X, Y);
    }

    IntMatrix as_matrix(const std::vector<Vec>& xs) const {
        IntMatrix X(f_.dim(), xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j)
            for (std::size_t i = 0; i < f_.dim(); ++i) X(i, j) = xs[j][i];
        return X;
    }

    // xs: chosen isotropic vectors; L: basis of {z : theta(x, z) = theta(z, x) = 0 for x in xs}
    void dfs(std::vector<Vec>& xs, const IntMatrix& L) {
        const bool at = kind_ == SubgroupKind::AlexanderTrivial;
        const std::size_t k = xs.size();
        const std::size_t step = at ? 2 : 1;
        if (k > 0 && step * k > result_.best.rank()) {
            if (at) offer(solve_partners(xs));
            else offer(as_matrix(xs));
            if (done()) return;
        }
        if (step * (k + 1) > cap_ || L.cols() == 0 || !fits(L)) return;
        const std::size_t m = L.cols(), n = f_.dim();
        const std::vector<Vec> Lc = columns64(L);
        std::vector<Vec> G(m, Vec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) G[i][j] = theta(Lc[i], Lc[j]);

        for_each_box_vector(m, budget_.coefficient_cap, [&](const Vec& c) {
            if (!spend()) return false;
            if (gcd_vec(c) != 1) return true;
            Vec Gc(m, 0), Gtc(m, 0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    Gc[i] += G[i][j] * c[j];
                    Gtc[j] += G[i][j] * c[i];
                }
            long q = 0;
            for (std::size_t i = 0; i < m; ++i) q += c[i] * Gc[i];
            if (q != 0) return true;
            if (at && !pairing_solvable(Gtc, Gc)) return true;
            Vec x(n, 0);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t i = 0; i < n; ++i) x[i] += Lc[j][i] * c[j];
            if (!at) {
                // the span must stay a direct summand
                auto X = as_matrix(xs);
                IntMatrix xm(n, 1);
                for (std::size_t i = 0; i < n; ++i) xm(i, 0) = x[i];
                if (!is_summand(hstack(X, xm))) return true;
            }
            // next lattice: coefficient vectors orthogonal to c under G and G^T
            IntMatrix cons(2, m);
            for (std::size_t j = 0; j < m; ++j) {
                cons(0, j) = Gtc[j];
                cons(1, j) = Gc[j];
            }
            const IntMatrix K = integer_kernel(cons);
            const IntMatrix next = K.cols() ? lll_reduce(L * K) : IntMatrix(n, 0);
            xs.push_back(x);
            dfs(xs, next);
            xs.pop_back();
            return !done();
        });
    }

    void random_layer() {
        const std::size_t n = f_.dim();
        if (n < 2 || n > budget_.subset_dim_cap) return;
        std::mt19937_64 rng(budget_.seed);
        for (std::size_t trial = 0; trial < budget_.random_trials && !done(); ++trial) {
            IntMatrix T = IntMatrix::identity(n);
            for (std::size_t s = 0; s < 3 * n; ++s) {
                const std::size_t i = rng() % n;
                std::size_t j = rng() % (n - 1);
                if (j >= i) ++j;
                const long sgn = (rng() % 2) ? 1 : -1;
                for (std::size_t r = 0; r < n; ++r) T(r, i) += sgn * T(r, j);
            }
            subsets(f_.matrix(), T);
        }
    }

    const SeifertForm& f_;
    SearchBudget budget_;
    SubgroupKind kind_;
    std::size_t cap_;
    std::vector<Vec> M64_;
    SearchResult result_;
};

} // namespace

SearchResult search_alexander_trivial(const SeifertForm& f, const SearchBudget& budget,
                                      std::optional<std::size_t> rank_cap) {
    std::size_t cap;
    if (rank_cap) {
        cap = *rank_cap;
    } else {
        const std::size_t r2 = homology_structure(f, 2).rank;
        const long lower = classical_lower_bounds(f, r2);
        const long half = (lower + 1) / 2;
        cap = half >= static_cast<long>(f.genus()) ? 0 : 2 * (f.genus() - static_cast<std::size_t>(half));
    }
    cap = std::min(cap, f.dim() - f.dim() % 2);
    return Searcher(f, budget, SubgroupKind::AlexanderTrivial, cap).run();
}

SearchResult search_isotropic(const SeifertForm& f, const SearchBudget& budget) {
    const Inertia in = inertia(symmetrize(f.matrix()));
    const std::size_t cap = std::min(in.zero + std::min(in.positive, in.negative), f.dim());
    return Searcher(f, budget, SubgroupKind::Isotropic, cap).run();
}

} // namespace seifert
