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

#include <seifert/blanchfield.hpp>

namespace seifert {

bool is_hermitian(const LaurentMatrix& M) { return M.square() && conjugate_transpose(M) == M; }

HermitianLaurentMatrix::HermitianLaurentMatrix(LaurentMatrix M) : M_(std::move(M)) {
    if (!is_hermitian(M_)) throw ContractError("matrix is not Hermitian");
}

bool has_block_shape(const IntMatrix& V) {
    if (!V.square() || V.rows() % 2 != 0) return false;
    const std::size_t g = V.rows() / 2;
    const IntMatrix B = V.block(0, 0, g, g), D = V.block(g, g, g, g);
    const IntMatrix C = V.block(0, g, g, g) - IntMatrix::identity(g);
    return B == B.transpose() && D == D.transpose() && V.block(g, 0, g, g) == C.transpose();
}

namespace {

// symplectic basis e_1..e_h, f_1..f_h (columns) of the lattice spanned by W,
// with respect to the antisymmetric A, assumed unimodular there
IntMatrix symplectic_basis(const IntMatrix& A, IntMatrix W) {
    const std::size_t n = W.rows();
    std::vector<std::vector<Integer>> es, fs;
    while (W.cols() > 0) {
        const std::size_t m = W.cols();
        const IntMatrix Aw = apply_congruence(A, W);
        IntMatrix e(m, 1);
        e(0, 0) = 1;
        std::optional<IntMatrix> f;
        for (std::size_t j = 1; j < m && !f; ++j)
            if (Aw(0, j) == 1) {
                f = IntMatrix(m, 1);
                (*f)(j, 0) = 1;
            }
        if (!f) f = solve_integer(Aw.block(0, 0, 1, m), IntMatrix{{1}});
        if (!f) throw ContractError("antisymmetric form is not unimodular");
        const IntMatrix rest = complete_to_unimodular(hstack(e, *f)).block(0, 2, m, m - 2);
        // z -> z - A(z,f) e + A(z,e) f
        IntMatrix proj = rest;
        const IntMatrix zf = rest.transpose() * Aw * *f, ze = rest.transpose() * Aw * e;
        for (std::size_t j = 0; j < rest.cols(); ++j)
            for (std::size_t i = 0; i < m; ++i) proj(i, j) += -zf(j, 0) * e(i, 0) + ze(j, 0) * (*f)(i, 0);
        es.push_back((W * e).column(0));
        fs.push_back((W * *f).column(0));
        W = W * proj;
    }
    auto cols = es;
    cols.insert(cols.end(), fs.begin(), fs.end());
    return IntMatrix::from_columns(cols, n);
}

template <typename T>
Matrix<T> permute(const Matrix<T>& M, const std::vector<std::size_t>& order) {
    Matrix<T> R(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) R(i, j) = M(order[i], order[j]);
    return R;
}

bool has_odd_diagonal(const IntMatrix& S) {
    for (std::size_t i = 0; i < S.rows(); ++i)
        if (mpz_odd_p(S(i, i).get_mpz_t())) return true;
    return false;
}

LaurentMatrix laurent_identity(std::size_t n) {
    LaurentMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

} // namespace

ShapedForm to_block_form(const SeifertForm& f) {
    if (!f.is_knot()) throw KnotsOnlyError();
    ShapedForm s;
    s.transform = symplectic_basis(antisymmetrize(f.matrix()), IntMatrix::identity(f.dim()));
    s.matrix = apply_congruence(f.matrix(), s.transform);
    if (!has_block_shape(s.matrix)) throw InternalConsistencyError("symplectic basis did not give the block shape");
    return s;
}

ShapedForm make_block_odd(const IntMatrix& shaped) {
    if (!has_block_shape(shaped)) throw ShapeError("matrix is not in the block shape");
    const std::size_t g = shaped.rows() / 2;
    ShapedForm s;
    s.transform = IntMatrix::identity(2 * g);
    if (g == 0 || has_odd_diagonal(shaped.block(0, 0, g, g))) {
        s.matrix = shaped;
        return s;
    }
    const IntMatrix I = IntMatrix::identity(g);
    if (!has_odd_diagonal(shaped.block(g, g, g, g))) {
        // (e + f, f)
        s.transform.set_block(g, 0, I);
    } else {
        // (f, -e)
        s.transform = IntMatrix(2 * g, 2 * g);
        s.transform.set_block(g, 0, I);
        s.transform.set_block(0, g, -I);
    }
    s.matrix = apply_congruence(shaped, s.transform);
    if (!has_block_shape(s.matrix) || !has_odd_diagonal(s.matrix.block(0, 0, g, g)))
        throw InternalConsistencyError("odd-block transformation failed");
    return s;
}

HermitianLaurentMatrix blanchfield_matrix(const IntMatrix& shaped) {
    if (!has_block_shape(shaped)) throw ShapeError("matrix is not in the block shape");
    const std::size_t g = shaped.rows() / 2;
    const LaurentPoly t = LaurentPoly::t(), tinv = t.involute();
    const LaurentPoly one_minus_t = LaurentPoly(1) - t, one_minus_tinv = LaurentPoly(1) - tinv;
    const LaurentPoly x = one_minus_t * one_minus_tinv;
    LaurentMatrix W(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            const Integer c = shaped(i, g + j) - (i == j ? 1 : 0);
            const Integer ct = shaped(g + i, j);  // (C^T)_ij
            W(i, j) = LaurentPoly(shaped(i, j));
            W(i, g + j) = one_minus_t * LaurentPoly(c) - (i == j ? t : LaurentPoly());
            W(g + i, j) = one_minus_tinv * LaurentPoly(ct) - (i == j ? tinv : LaurentPoly());
            W(g + i, g + j) = x * LaurentPoly(shaped(g + i, g + j));
        }
    return HermitianLaurentMatrix(std::move(W));
}

bool check_diagonalizable_at_1(const IntMatrix& S) {
    if (!S.square() || S != S.transpose()) throw ContractError("matrix is not symmetric");
    if (!has_odd_diagonal(S)) return false;
    const Inertia in = inertia(S);
    return in.positive > 0 && in.negative > 0 && abs(determinant(S)) == 1;
}

UalgCertificate reduce_to_W4(const SeifertForm& f, const SubgroupCertificate& cert) {
    if (!f.is_knot()) throw KnotsOnlyError();
    const auto check = verify_alexander_trivial(f, cert.basis);
    if (!check.verified) throw ContractError("certificate does not verify: " + check.reason);
    const IntMatrix& M = f.matrix();
    const IntMatrix A = antisymmetrize(M);
    const std::size_t n = f.dim(), k = cert.rank() / 2, h = f.genus() - k;

    // Alexander-trivial part as [[0, 1+U], [U^T, 0]] with U strictly upper triangular
    IntMatrix Bu(n, 0);
    if (k > 0) {
        const IntMatrix T1 = standard_shape_transform(check.restricted);
        const NormalForm nf = normal_form_alex_trivial(apply_congruence(check.restricted, T1));
        Bu = cert.basis * T1 * nf.transform;
    }

    // orthogonal complement under A, then a symplectic basis made odd
    IntMatrix comp = IntMatrix::identity(n);
    if (k > 0) {
        const IntMatrix R = complete_to_unimodular(Bu).block(0, 2 * k, n, n - 2 * k);
        const IntMatrix Ginv = inverse_unimodular(apply_congruence(A, Bu));
        comp = R - Bu * Ginv * (Bu.transpose() * A * R);
    }
    IntMatrix Z = symplectic_basis(A, comp);
    const ShapedForm odd = make_block_odd(apply_congruence(M, Z));
    Z = Z * odd.transform;

    UalgCertificate out;
    out.basis = hstack(Bu, Z);
    if (abs(determinant(out.basis)) != 1) throw InternalConsistencyError("reduction basis is not unimodular");
    out.B_block = odd.matrix.block(0, 0, h, h);

    // (X, E, Y, F) is in the block shape; its Blanchfield matrix reordered to (X, Y, E, F) is W1
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < k; ++i) order.push_back(i);
    for (std::size_t i = 0; i < h; ++i) order.push_back(2 * k + i);
    for (std::size_t i = 0; i < k; ++i) order.push_back(k + i);
    for (std::size_t i = 0; i < h; ++i) order.push_back(2 * k + h + i);
    const IntMatrix Vp = permute(apply_congruence(M, out.basis), order);
    if (!has_block_shape(Vp)) throw InternalConsistencyError("reordered matrix is not in the block shape");
    const LaurentMatrix Vt = blanchfield_matrix(Vp).matrix();
    std::vector<std::size_t> back(n);
    for (std::size_t i = 0; i < n; ++i) back[order[i]] = i;
    out.W1 = permute(Vt, back);

    const std::size_t a = 2 * k;
    out.T = laurent_identity(n);
    if (k > 0) {
        const LaurentMatrix K = out.W1.block(0, 0, a, a);
        const LaurentMatrix S = inverse_unit_det(K.block(0, k, k, k));
        LaurentMatrix Kinv(a, a);
        Kinv.set_block(0, k, conjugate_transpose(S));
        Kinv.set_block(k, 0, S);
        if (Kinv * K != laurent_identity(a)) throw InternalConsistencyError("inverse of the split block is wrong");
        if (h > 0) out.T.set_block(0, a, -(Kinv * out.W1.block(0, a, a, 2 * h)));
    }
    out.det_T = det_laurent(out.T);
    out.W2 = conjugate_transpose(out.T) * out.W1 * out.T;
    if (out.det_T != LaurentPoly(1)) throw InternalConsistencyError("transformation determinant is not 1");
    if (!out.W2.block(0, a, a, 2 * h).is_zero() || !out.W2.block(a, 0, 2 * h, a).is_zero())
        throw InternalConsistencyError("W2 does not split");
    out.det_W3 = det_laurent(out.W2.block(0, 0, a, a));
    if (!out.det_W3.is_unit()) throw InternalConsistencyError("split-off block does not have unit determinant");

    out.W4 = HermitianLaurentMatrix(out.W2.block(a, a, 2 * h, 2 * h));
    out.W4_at_1 = out.W4.at_one();
    IntMatrix expected(2 * h, 2 * h);
    expected.set_block(0, 0, out.B_block);
    expected.set_block(0, h, -IntMatrix::identity(h));
    expected.set_block(h, 0, -IntMatrix::identity(h));
    if (out.W4_at_1 != expected) throw InternalConsistencyError("W4(1) is not [[B, -1], [-1, 0]]");
    if (h == 0) {
        out.odd = out.indefinite = out.unimodular = true;
    } else {
        out.odd = has_odd_diagonal(out.W4_at_1);
        const Inertia in = inertia(out.W4_at_1);
        out.indefinite = in.positive > 0 && in.negative > 0;
        out.unimodular = abs(determinant(out.W4_at_1)) == 1;
    }
    return out;
}

UalgBounds ualg_bounds(const SeifertForm& f, const BoundReport& galg, std::optional<std::size_t> external_ualg) {
    if (galg.quantity != Quantity::AlgebraicGenus) throw ContractError("need an algebraic genus report");
    UalgBounds out;
    BoundReport& rep = out.report;
    rep.quantity = Quantity::AlgebraicUnknotting;
    rep.lower = {galg.lower.value, "g_alg lower bound (" + galg.lower.provenance + ")", galg.lower.certified};
    rep.upper = {2 * galg.upper.value, "twice the g_alg upper bound (theorem-based, no certificate)", false};

    auto offer_upper = [&](long v, std::string why, bool certified) {
        if (v < rep.upper.value || (v == rep.upper.value && certified && !rep.upper.certified))
            rep.upper = {v, std::move(why), certified};
    };
    if (f.is_knot()) {
        const LaurentPoly delta = alexander_polynomial(f);
        offer_upper(static_cast<long>(delta.breadth()), "Alexander breadth (theorem-based, no certificate)", false);
    }
    if (f.is_knot() && !galg.certificates.empty()) {
        const auto& bc = galg.certificates.front();
        try {
            const SeifertForm amb = SeifertForm::validate(bc.ambient, 1);
            auto w4 = reduce_to_W4(amb, bc.certificate);
            if (w4.certified())
                offer_upper(static_cast<long>(w4.certified_bound()),
                            "W4 of size " + std::to_string(w4.certified_bound()) + " with diagonalizable W4(1)", true);
            out.certificate = std::move(w4);
        } catch (const ShapeError& e) {
            out.reduction_failure = e.what();
        }
    }
    if (external_ualg) {
        const long u = static_cast<long>(*external_ualg);
        if (u > rep.lower.value) rep.lower = {u, "external u_alg", false};
        offer_upper(u, "external u_alg", false);
    }
    if (rep.lower.value > rep.upper.value)
        throw ContractError("u_alg bounds are inconsistent; check the external value");
    return out;
}

} // namespace seifert
