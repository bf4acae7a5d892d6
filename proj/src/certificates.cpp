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

#include <seifert/certificates.hpp>

namespace seifert {

const char* to_string(SubgroupKind kind) {
    switch (kind) {
    case SubgroupKind::AlexanderTrivial: return "alexander-trivial";
    case SubgroupKind::Isotropic: return "isotropic";
    case SubgroupKind::Metabolizer: return "metabolizer";
    }
    return "unknown";
}

SubgroupKind subgroup_kind_from_string(const std::string& s) {
    if (s == "alexander-trivial") return SubgroupKind::AlexanderTrivial;
    if (s == "isotropic") return SubgroupKind::Isotropic;
    if (s == "metabolizer") return SubgroupKind::Metabolizer;
    throw ContractError("unknown subgroup kind '" + s + "'");
}

bool basis_less(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
}

namespace {

SubgroupCertificate start(const SeifertForm& f, SubgroupKind kind, const IntMatrix& basis) {
    if (basis.rows() != f.dim()) throw DimensionError("basis has " + std::to_string(basis.rows()) +
                                                      " rows, form has dimension " + std::to_string(f.dim()));
    SubgroupCertificate c;
    c.kind = kind;
    c.basis = basis;
    c.restricted = apply_congruence(f.matrix(), basis);
    return c;
}

SubgroupCertificate fail(SubgroupCertificate c, std::string why) {
    c.verified = false;
    c.reason = std::move(why);
    return c;
}

} // namespace

SubgroupCertificate verify_alexander_trivial(const SeifertForm& f, const IntMatrix& basis) {
    auto c = start(f, SubgroupKind::AlexanderTrivial, basis);
    if (c.rank() % 2 != 0) return fail(std::move(c), "odd rank");
    if (!is_summand(basis)) return fail(std::move(c), "columns do not span a direct summand");
    const LaurentPoly d = det_laurent(alexander_matrix(c.restricted));
    if (!d.is_unit() || d.low() != static_cast<long>(c.rank() / 2))
        return fail(std::move(c), "det(tB - B^T) = " + d.to_string() + " is not a unit");
    c.verified = true;
    return c;
}

SubgroupCertificate verify_isotropic(const SeifertForm& f, const IntMatrix& basis) {
    auto c = start(f, SubgroupKind::Isotropic, basis);
    if (!is_summand(basis)) return fail(std::move(c), "columns do not span a direct summand");
    if (!c.restricted.is_zero()) return fail(std::move(c), "restricted form is not zero");
    c.verified = true;
    return c;
}

SubgroupCertificate verify_metabolizer(const SeifertForm& f, const IntMatrix& basis) {
    auto c = verify_isotropic(f, basis);
    c.kind = SubgroupKind::Metabolizer;
    if (c.verified && 2 * c.rank() != f.dim()) return fail(std::move(c), "rank is not half the dimension");
    return c;
}

SubgroupCertificate verify(const SeifertForm& f, SubgroupKind kind, const IntMatrix& basis) {
    switch (kind) {
    case SubgroupKind::AlexanderTrivial: return verify_alexander_trivial(f, basis);
    case SubgroupKind::Isotropic: return verify_isotropic(f, basis);
    case SubgroupKind::Metabolizer: return verify_metabolizer(f, basis);
    }
    throw ContractError("unknown subgroup kind");
}

SeifertForm stabilize(const SeifertForm& f, const std::vector<Integer>& v) {
    const std::size_t n = f.dim();
    if (v.size() != n) throw DimensionError("stabilization vector has the wrong length");
    IntMatrix S(n + 2, n + 2);
    S.set_block(0, 0, f.matrix());
    for (std::size_t i = 0; i < n; ++i) {
        S(i, n) = v[i];
        S(n, i) = v[i];
    }
    S(n, n + 1) = 1;
    return SeifertForm::validate(std::move(S), f.components());
}

SubgroupCertificate lift_through_stabilization(const SeifertForm& stabilized, const SubgroupCertificate& cert) {
    const std::size_t n = cert.basis.rows();
    if (stabilized.dim() != n + 2) throw DimensionError("form is not a stabilization of the certificate's ambient");
    IntMatrix B(n + 2, cert.rank() + 2);
    B.set_block(0, 0, cert.basis);
    B(n, cert.rank()) = 1;
    B(n + 1, cert.rank() + 1) = 1;
    return verify(stabilized, cert.kind, B);
}

SeifertForm crossing_change_move(const SeifertForm& f, int sign) {
    if (sign != 1 && sign != -1) throw ContractError("crossing sign must be +1 or -1");
    const std::size_t n = f.dim();
    if (n == 0) throw DimensionError("crossing change needs a nonempty form");
    IntMatrix S(n + 2, n + 2);
    S.set_block(0, 0, f.matrix());
    S(0, 0) += sign;
    S(0, n) = -sign;
    S(n, n + 1) = 1;
    return SeifertForm::validate(std::move(S), f.components());
}

SubgroupCertificate lift_through_crossing_change(const SeifertForm& moved, const SubgroupCertificate& cert) {
    const std::size_t n = cert.basis.rows();
    if (moved.dim() != n + 2) throw DimensionError("form is not a crossing-change move of the certificate's ambient");
    // the original form lives on e_1 + e_{n+1}, e_2, ..., e_n
    IntMatrix B(n + 2, cert.rank());
    B.set_block(0, 0, cert.basis);
    for (std::size_t j = 0; j < cert.rank(); ++j) B(n, j) = cert.basis(0, j);
    return verify(moved, cert.kind, B);
}

NormalForm normal_form_alex_trivial(const IntMatrix& B) {
    if (!B.square() || B.rows() % 2 != 0) throw ShapeError("normal form needs a square matrix of even size");
    const std::size_t k = B.rows() / 2;
    const IntMatrix E = B.block(0, k, k, k), F = B.block(k, 0, k, k), Q = B.block(k, k, k, k);
    if (!B.block(0, 0, k, k).is_zero()) throw ShapeError("upper-left block is not zero");
    IntMatrix P = E - IntMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (P(i, j) != 0) throw ShapeError("upper-right block is not 1 + strictly upper triangular");
    if (F != P.transpose()) throw ShapeError("lower-left block is not the transpose of P");

    // entries in order of increasing i + j; the sums only reach earlier ones
    IntMatrix N(k, k);
    for (std::size_t s = 0; s + 1 < 2 * k; ++s)
        for (std::size_t i = 0; i < k; ++i) {
            if (s < i || s - i >= k) continue;
            const std::size_t j = s - i;
            Integer v = Q(i, j);
            for (std::size_t l = 0; l < j; ++l) v -= N(i, l) * P(l, j);
            for (std::size_t l = 0; l < i; ++l) v -= N(j, l) * P(l, i);
            N(i, j) = v;
        }

    NormalForm nf;
    nf.N = N;
    nf.transform = IntMatrix::identity(2 * k);
    nf.transform.set_block(0, k, -N.transpose());
    nf.result = apply_congruence(B, nf.transform);
    if (!nf.result.block(k, k, k, k).is_zero())
        throw InternalConsistencyError("normal form left a nonzero lower-right block");
    return nf;
}

IntMatrix standard_shape_transform(const IntMatrix& V) {
    if (!V.square() || V.rows() % 2 != 0) throw ShapeError("shape reduction needs a square matrix of even size");
    const std::size_t n = V.rows();
    std::vector<std::vector<Integer>> xs, ys;
    IntMatrix W = IntMatrix::identity(n);  // basis of the part still to be split
    while (W.cols() > 0) {
        const std::size_t m = W.cols();
        const IntMatrix Vw = apply_congruence(V, W);
        const IntMatrix Aw = antisymmetrize(Vw);
        const IntMatrix ker = integer_kernel(Vw);
        if (ker.cols() == 0) throw ShapeError("restricted form is nonsingular, so it is not Alexander-trivial");
        const IntMatrix x = ker.block(0, 0, m, 1);
        const auto y = solve_integer(x.transpose() * Aw, IntMatrix{{1}});
        if (!y) throw ShapeError("antisymmetric part is not unimodular");
        // z -> z + A(y,z) x - A(x,z) y projects onto the orthogonal complement
        const IntMatrix rest = complete_to_unimodular(hstack(x, *y)).block(0, 2, m, m - 2);
        const IntMatrix ax = x.transpose() * Aw, ay = y->transpose() * Aw;
        IntMatrix proj = rest;
        for (std::size_t j = 0; j < rest.cols(); ++j) {
            Integer cy = 0, cx = 0;
            for (std::size_t i = 0; i < m; ++i) {
                cy += ay(0, i) * rest(i, j);
                cx += ax(0, i) * rest(i, j);
            }
            for (std::size_t i = 0; i < m; ++i) proj(i, j) += cy * x(i, 0) - cx * (*y)(i, 0);
        }
        xs.push_back((W * x).column(0));
        ys.push_back((W * *y).column(0));
        W = W * proj;
    }
    // the first split pair goes last so that P ends up strictly upper triangular
    std::reverse(xs.begin(), xs.end());
    std::reverse(ys.begin(), ys.end());
    auto cols = xs;
    cols.insert(cols.end(), ys.begin(), ys.end());
    IntMatrix T = IntMatrix::from_columns(cols, n);
    const IntMatrix S = apply_congruence(V, T);
    const std::size_t k = n / 2;
    IntMatrix P = S.block(0, k, k, k) - IntMatrix::identity(k);
    bool ok = S.block(0, 0, k, k).is_zero() && S.block(k, 0, k, k) == P.transpose();
    for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (P(i, j) != 0) ok = false;
    if (!ok || abs(determinant(T)) != 1) throw InternalConsistencyError("shape reduction produced a wrong block pattern");
    return T;
}

SubgroupCertificate isotropic_from_alexander_trivial(const SeifertForm& f, const SubgroupCertificate& cert) {
    if (cert.kind != SubgroupKind::AlexanderTrivial || !cert.verified)
        throw ContractError("need a verified Alexander-trivial certificate");
    const std::size_t k = cert.rank() / 2;
    if (k == 0) return verify_isotropic(f, IntMatrix(f.dim(), 0));
    const IntMatrix T = standard_shape_transform(cert.restricted);
    auto iso = verify_isotropic(f, (cert.basis * T).block(0, 0, f.dim(), k));
    if (!iso.verified) throw InternalConsistencyError("isotropic half failed verification: " + iso.reason);
    return iso;
}

namespace {

IntMatrix two_by_two(long a, long b, long c, long d) { return IntMatrix{{a, b}, {c, d}}; }

} // namespace

SubgroupCertificate metabolic_4x4_reduce(const SeifertForm& f, const SubgroupCertificate& metabolizer) {
    const IntMatrix& M = f.matrix();
    if (f.dim() != 4 || !f.is_knot()) throw ContractError("metabolic reduction needs a 4x4 knot form");
    const auto check = verify_metabolizer(f, metabolizer.basis);
    if (!check.verified) throw ContractError("invalid metabolizer: " + check.reason);
    if (abs(determinant(M)) != 1) throw NotUnimodular();

    // extend the metabolizer to a basis, preferring standard vectors
    IntMatrix W;
    const std::size_t prefs[6][2] = {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}};
    for (const auto& p : prefs) {
        IntMatrix cand = metabolizer.basis;
        IntMatrix ext(4, 2);
        ext(p[0], 0) = 1;
        ext(p[1], 1) = 1;
        cand = hstack(cand, ext);
        if (abs(determinant(cand)) == 1) {
            W = cand;
            break;
        }
    }
    if (W.rows() == 0) W = complete_to_unimodular(metabolizer.basis);

    // [[0, U], [V, *]] -> [[0, 1], [V', *]] via diag(1, U^-1)
    const IntMatrix A1 = apply_congruence(M, W);
    const IntMatrix U = A1.block(0, 2, 2, 2);
    IntMatrix D = IntMatrix::identity(4);
    D.set_block(2, 2, inverse_unimodular(U));
    IntMatrix basis = W * D;
    IntMatrix A = apply_congruence(M, basis);

    auto conj = [&](const IntMatrix& T) {
        IntMatrix G(4, 4);
        G.set_block(0, 0, T);
        G.set_block(2, 2, inverse_unimodular(T).transpose());
        basis = basis * G;
        A = apply_congruence(M, basis);
    };
    const IntMatrix moves[4] = {two_by_two(1, 1, 0, 1), two_by_two(1, -1, 0, 1), two_by_two(1, 0, 1, 1),
                                two_by_two(1, 0, -1, 1)};
    while (true) {
        const Integer a = A(2, 0), d = A(3, 1);
        if (a == 0) break;
        if (d == 0) {
            conj(two_by_two(0, 1, -1, 0));
            continue;
        }
        if (abs(d) < abs(a)) {
            conj(two_by_two(0, 1, -1, 0));
            continue;
        }
        bool improved = false;
        for (const auto& T : moves) {
            IntMatrix Vp = inverse_unimodular(T) * A.block(2, 0, 2, 2) * T;
            if (abs(Vp(0, 0)) < abs(a)) {
                conj(T);
                improved = true;
                break;
            }
        }
        if (!improved) throw InternalConsistencyError("metabolic reduction stalled with a != 0");
    }
    IntMatrix out = basis.select_columns({0, 2});
    // flipping both columns keeps the restricted form
    for (std::size_t i = 0; i < 4; ++i) {
        if (out(i, 0) == 0) continue;
        if (out(i, 0) < 0) out = -out;
        break;
    }
    auto cert = verify_alexander_trivial(f, out);
    if (!cert.verified) throw InternalConsistencyError("metabolic reduction produced an invalid subgroup: " + cert.reason);
    return cert;
}

} // namespace seifert
