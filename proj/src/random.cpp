#include "starlin/random.hpp"

#include "starlin/convert.hpp"

namespace starlin {

namespace {

StarMatrix orthonormalize_columns(const StarMatrix& m) {
    StarMatrix q = m;
    for (int j = 0; j < q.cols(); ++j) {
        StarMatrix v = q.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < j; ++i) {
                StarMatrix qi = q.col(i);
                v = sub(v, scalar_mul_right(qi, inner(qi, v)));
            }
        double nrm = v.frobenius();
        if (nrm < 1e-10) throw numerical_error("orthonormalize_columns: rank deficiency");
        q.set_col(j, scale(v, 1.0 / nrm));
    }
    return q;
}

StarMatrix random_real(int rows, int cols, Rng& rng) {
    return random_matrix(alg_real(), rows, cols, rng);
}

}  // namespace

StarMatrix random_matrix(const Algebra* a, int rows, int cols, Rng& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    StarMatrix m(a, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int k = 0; k < a->dim; ++k) m.at(i, j, k) = dist(rng);
    return m;
}

StarMatrix random_self_adjoint(const Algebra* a, int n, Rng& rng) {
    StarMatrix x = random_matrix(a, n, n, rng);
    return scale(add(x, adjoint(x)), 0.5);
}

StarMatrix random_unitary(const Algebra* a, int n, Rng& rng) {
    if (a == alg_real() || a == alg_complex() || a == alg_quaternion())
        return orthonormalize_columns(random_matrix(a, n, n, rng));
    if (a == alg_rr_id()) {
        StarMatrix u = orthonormalize_columns(random_real(n, n, rng));
        StarMatrix v = orthonormalize_columns(random_real(n, n, rng));
        return rr_from(a, u, v);
    }
    if (a == alg_rr_swap()) {
        // [P, P^{-1}] with P = Q0 diag(d) Q1, d away from zero
        StarMatrix q0 = orthonormalize_columns(random_real(n, n, rng));
        StarMatrix q1 = orthonormalize_columns(random_real(n, n, rng));
        std::uniform_real_distribution<double> dd(0.5, 1.5);
        std::vector<double> d(static_cast<size_t>(n)), dinv(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            d[static_cast<size_t>(i)] = dd(rng);
            dinv[static_cast<size_t>(i)] = 1.0 / d[static_cast<size_t>(i)];
        }
        StarMatrix p = mul(q0, mul(real_diag(d), q1));
        StarMatrix pinv = mul(adjoint(q1), mul(real_diag(dinv), adjoint(q0)));
        return bracket(p, pinv);
    }
    if (a == alg_dual()) {
        StarMatrix q0 = orthonormalize_columns(random_real(n, n, rng));
        StarMatrix k = random_real(n, n, rng);
        StarMatrix skew = scale(sub(k, adjoint(k)), 0.5);
        // Q0 (I + A eps), A skew
        StarMatrix st = q0, ns = mul(q0, skew);
        StarMatrix u(a, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                u.at(i, j, 0) = st.at(i, j, 0);
                u.at(i, j, 1) = ns.at(i, j, 0);
            }
        return u;
    }
    if (a == alg_cl101_pos() || a == alg_cl101_neg()) {
        // (U,V)(I + (K, -K^T) delta) is unitary over *_1
        StarMatrix u = orthonormalize_columns(random_real(n, n, rng));
        StarMatrix v = orthonormalize_columns(random_real(n, n, rng));
        StarMatrix k = random_real(n, n, rng);
        StarMatrix base = rr_from(alg_rr_id(), u, v);
        StarMatrix kk = rr_from(alg_rr_id(), k, neg(transpose_plain(k)));
        StarMatrix factor = mat_join_delta(alg_cl101_pos(),
                                           StarMatrix::identity(alg_rr_id(), n), kk);
        StarMatrix w = mul(embed_base(alg_cl101_pos(), base), factor);
        return a == alg_cl101_pos() ? w : iso_cl101(w);
    }
    if (a == alg_cl011_pos() || a == alg_cl011_neg()) {
        StarMatrix u0 = orthonormalize_columns(random_matrix(alg_complex(), n, n, rng));
        StarMatrix k = random_matrix(alg_complex(), n, n, rng);
        // *_1 wants K skew-symmetric, *_{-1} symmetric
        StarMatrix kk = (a == alg_cl011_pos()) ? scale(sub(k, transpose_plain(k)), 0.5)
                                               : scale(add(k, transpose_plain(k)), 0.5);
        StarMatrix factor =
            mat_join_delta(a, StarMatrix::identity(alg_complex(), n), kk);
        return mul(embed_base(a, u0), factor);
    }
    if (a == alg_quatdual()) {
        StarMatrix u0 = orthonormalize_columns(random_matrix(alg_quaternion(), n, n, rng));
        StarMatrix k = random_matrix(alg_quaternion(), n, n, rng);
        StarMatrix herm = scale(add(k, adjoint(k)), 0.5);
        StarMatrix factor =
            mat_join_delta(a, StarMatrix::identity(alg_quaternion(), n), herm);
        return mul(embed_base(a, u0), factor);
    }
    throw precondition_error("random_unitary: unsupported algebra '" + a->name + "'");
}

StarMatrix random_unimodular(int n, Rng& rng) {
    StarMatrix p = StarMatrix::identity(alg_real(), n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int step = 0; step < 3 * n; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        double c = coeff(rng);
        for (int col = 0; col < n; ++col) p.at(i, col, 0) += c * p.at(j, col, 0);
    }
    return p;
}

}  // namespace starlin
