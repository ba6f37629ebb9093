#include "starlin/classic.hpp"

#include <algorithm>
#include <cmath>

#include "starlin/convert.hpp"

namespace starlin {

namespace {

double rel_tol(double tol, const StarMatrix& m) {
    if (tol < 0.0) tol = 1e-8;
    return tol * (1.0 + m.frobenius());
}

// pivoted completion of a partial real orthonormal column set to a basis
void complete_orthonormal_real(StarMatrix& u, int filled) {
    const int n = u.rows();
    for (int col = filled; col < n; ++col) {
        int best = -1;
        double best_norm = -1.0;
        StarMatrix best_r;
        for (int k = 0; k < n; ++k) {
            StarMatrix r(alg_real(), n, 1);
            r.at(k, 0, 0) = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (int j = 0; j < col; ++j) {
                    StarMatrix uj = u.col(j);
                    r = sub(r, scale(uj, inner(uj, r)[0]));
                }
            double nrm = r.frobenius();
            if (nrm > best_norm + 1e-14) {
                best_norm = nrm;
                best = k;
                best_r = r;
            }
        }
        if (best < 0 || best_norm < 1e-8)
            throw numerical_error("svd: failed to complete an orthonormal factor");
        u.set_col(col, scale(best_r, 1.0 / best_norm));
    }
}

}  // namespace

SvdResult svd(const StarMatrix& m, double tol) {
    if (m.algebra() != alg_real()) throw precondition_error("svd: expects a real matrix");
    const int rows = m.rows(), cols = m.cols();
    const int s = std::max(rows, cols);
    const int kmin = std::min(rows, cols);

    // pad to square; the construction needs (M, M^T) over one square shape
    StarMatrix mp(alg_real(), s, s);
    mp.set_block(0, 0, m);

    StarMatrix h(alg_cl101_pos(), s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            h.at(i, j, 2) = mp.at(i, j, 0);
            h.at(i, j, 3) = mp.at(j, i, 0);
        }

    std::vector<SvdEigenvalue> eigs;
    EigenDecomp dec = spectral_svdalg(h, tol, &eigs);

    StarMatrix wbase = mat_base_part(dec.U);
    StarMatrix ufull = rr_left(wbase), vfull = rr_right(wbase);

    const double stray = rel_tol(tol, m) + 1e-9;
    std::vector<double> sigma_full;
    int r = 0;
    for (const SvdEigenvalue& e : eigs) {
        if (e.is_dual) {
            if (std::abs(e.st) > stray)
                throw numerical_error("svd: non-infinitesimal eigenvalue in (M, M^T) delta");
            sigma_full.push_back(e.nst);
            ++r;
        } else {
            if (std::abs(e.x) > stray || std::abs(e.y) > stray)
                throw numerical_error("svd: nonzero pair eigenvalue in (M, M^T) delta");
            sigma_full.push_back(0.0);
        }
    }

    SvdResult out;
    out.sigma.assign(sigma_full.begin(), sigma_full.begin() + kmin);
    if (rows == cols) {
        out.u = ufull;
        out.v = vfull;
    } else {
        // the padded directions live only in the zero singular space; keep the
        // sigma > 0 columns and complete each factor deterministically
        out.u = StarMatrix(alg_real(), rows, rows);
        out.v = StarMatrix(alg_real(), cols, cols);
        for (int k = 0; k < r; ++k) {
            StarMatrix uc = ufull.col(k).block(0, 0, rows, 1);
            StarMatrix vc = vfull.col(k).block(0, 0, cols, 1);
            double un = uc.frobenius(), vn = vc.frobenius();
            if (un < 0.9 || vn < 0.9)
                throw numerical_error("svd: singular direction leaked into the padding");
            out.u.set_col(k, scale(uc, 1.0 / un));
            out.v.set_col(k, scale(vc, 1.0 / vn));
        }
        complete_orthonormal_real(out.u, r);
        complete_orthonormal_real(out.v, r);
    }

    StarMatrix sig = sigma_matrix(out, rows, cols);
    out.recon_residual = sub(mul(out.u, mul(sig, adjoint(out.v))), m).frobenius();
    double du = sub(mul(adjoint(out.u), out.u), StarMatrix::identity(alg_real(), rows)).frobenius();
    double dv = sub(mul(adjoint(out.v), out.v), StarMatrix::identity(alg_real(), cols)).frobenius();
    out.unitary_residual = std::max(du, dv);
    return out;
}

StarMatrix sigma_matrix(const SvdResult& r, int rows, int cols) {
    StarMatrix s(alg_real(), rows, cols);
    for (size_t k = 0; k < r.sigma.size(); ++k)
        s.at(static_cast<int>(k), static_cast<int>(k), 0) = r.sigma[k];
    return s;
}

TakagiResult takagi(const StarMatrix& s, double tol) {
    if (s.algebra() != alg_complex()) throw precondition_error("takagi: expects a complex matrix");
    if (s.rows() != s.cols()) throw precondition_error("takagi: non-square input");
    double dev = sub(s, transpose_plain(s)).frobenius();
    if (dev > rel_tol(tol, s))
        throw precondition_error("takagi: input not complex-symmetric (|S - S^T| = " +
                                 std::to_string(dev) + ")");

    StarMatrix h = mat_join_delta(alg_cl011_pos(), StarMatrix(alg_complex(), s.rows(), s.rows()), s);
    EigenDecomp dec = spectral_takagi_alg(h, tol);

    TakagiResult out;
    out.u = mat_base_part(dec.U);
    for (int i = 0; i < s.rows(); ++i) out.d.push_back(dec.D.at(i, i, 2));

    StarMatrix dm = complex_from(real_diag(out.d), StarMatrix(alg_real(), s.rows(), s.rows()));
    out.recon_residual = sub(mul(out.u, mul(dm, transpose_plain(out.u))), s).frobenius();
    out.unitary_residual =
        sub(mul(adjoint(out.u), out.u), StarMatrix::identity(alg_complex(), s.rows())).frobenius();
    return out;
}

SkewTakagiResult skew_takagi(const StarMatrix& s, double tol) {
    if (s.algebra() != alg_complex())
        throw precondition_error("skew_takagi: expects a complex matrix");
    if (s.rows() != s.cols()) throw precondition_error("skew_takagi: non-square input");
    double dev = add(s, transpose_plain(s)).frobenius();
    if (dev > rel_tol(tol, s))
        throw precondition_error("skew_takagi: input not skew-symmetric (|S + S^T| = " +
                                 std::to_string(dev) + ")");

    StarMatrix h = mat_join_delta(alg_cl011_neg(), StarMatrix(alg_complex(), s.rows(), s.rows()), s);
    EigenDecomp dec = spectral_skewtakagi_alg(h, tol);

    SkewTakagiResult out;
    out.u = mat_base_part(dec.U);
    out.d = StarMatrix(alg_real(), s.rows(), s.rows());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) out.d.at(i, j, 0) = dec.D.at(i, j, 2);
    out.mus = dec.mus;

    StarMatrix dm = complex_from(out.d, StarMatrix(alg_real(), s.rows(), s.rows()));
    out.recon_residual = sub(mul(out.u, mul(dm, transpose_plain(out.u))), s).frobenius();
    out.unitary_residual =
        sub(mul(adjoint(out.u), out.u), StarMatrix::identity(alg_complex(), s.rows())).frobenius();
    return out;
}

PairDiagResult pair_diag(const StarMatrix& h, const StarMatrix& k, double tol) {
    if (h.algebra() != alg_real() || k.algebra() != alg_real())
        throw precondition_error("pair_diag: expects real matrices");
    EigenDecomp dh = eig_real_symmetric(h, tol);
    EigenDecomp dk = eig_real_symmetric(k, tol);
    PairDiagResult out;
    out.u = rr_from(alg_rr_id(), dh.U, dk.U);
    out.d = rr_from(alg_rr_id(), dh.D, dk.D);
    StarMatrix hk = rr_from(alg_rr_id(), h, k);
    out.recon_residual = sub(mul(out.u, mul(out.d, adjoint(out.u))), hk).frobenius();
    out.unitary_residual =
        sub(mul(adjoint(out.u), out.u), StarMatrix::identity(alg_rr_id(), h.rows())).frobenius();
    return out;
}

EigenDecomp quaternion_skew_spectral(const StarMatrix& m, double tol) {
    return canon_quaternion_skew(m, tol);
}

// ------------------------------------------------------------------ Jordan

namespace {

RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, int n) {
    RationalMatrix m(n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
    return m;
}

std::vector<Rational> apply_matrix(const RationalMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> r(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

}  // namespace

JordanResult jordan(const RationalMatrix& m) {
    if (m.rows != m.cols) throw precondition_error("jordan: non-square input");
    const int n = m.rows;
    std::vector<Rational> chi = characteristic_polynomial(m);
    std::vector<std::pair<Rational, int>> roots;
    try {
        roots = rational_roots(chi);
    } catch (const precondition_error& e) {
        throw precondition_error(std::string("jordan: irrational (or complex) eigenvalues; ") +
                                 e.what());
    }
    int total = 0;
    for (auto& [r, mult] : roots) total += mult;
    if (total != n) throw precondition_error("jordan: eigenvalue multiplicities do not sum to n");

    JordanResult out;
    std::vector<std::vector<Rational>> p_cols;

    for (auto& [lambda, mult] : roots) {
        RationalMatrix a = m;
        for (int i = 0; i < n; ++i) a.at(i, i) -= lambda;

        // kernel filtration of (M - lambda I)^j
        std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
        std::vector<int> kdim{0};
        while (kdim.back() < mult) {
            powers.push_back(mul(powers.back(), a));
            kdim.push_back(n - rank(powers.back()));
        }
        const int jmax = static_cast<int>(kdim.size()) - 1;
        // blocks_ge[j] = number of blocks of size >= j
        std::vector<int> blocks_ge(static_cast<size_t>(jmax) + 2, 0);
        for (int j = 1; j <= jmax; ++j)
            blocks_ge[static_cast<size_t>(j)] = kdim[static_cast<size_t>(j)] - kdim[static_cast<size_t>(j - 1)];

        // choose chain tops from the top level downwards
        std::vector<std::pair<std::vector<Rational>, int>> tops;  // (vector, height)
        for (int j = jmax; j >= 1; --j) {
            int needed = blocks_ge[static_cast<size_t>(j)] - blocks_ge[static_cast<size_t>(j + 1)];
            if (needed <= 0) continue;
            // span to stay independent of: ker A^{j-1}  plus  A^{h-j} v for taller tops
            std::vector<std::vector<Rational>> span_cols = kernel_basis(powers[static_cast<size_t>(j - 1)]);
            for (auto& [v, h] : tops) {
                std::vector<Rational> img = v;
                for (int t = 0; t < h - j; ++t) img = apply_matrix(a, img);
                span_cols.push_back(img);
            }
            std::vector<std::vector<Rational>> pool = kernel_basis(powers[static_cast<size_t>(j)]);
            for (const auto& cand : pool) {
                if (needed == 0) break;
                std::vector<std::vector<Rational>> trial = span_cols;
                trial.push_back(cand);
                if (rank(from_columns(trial, n)) > rank(from_columns(span_cols, n))) {
                    span_cols.push_back(cand);
                    tops.emplace_back(cand, j);
                    --needed;
                }
            }
            if (needed != 0) throw numerical_error("jordan: chain construction failed");
        }

        // blocks for this eigenvalue: size descending
        std::stable_sort(tops.begin(), tops.end(),
                         [](const auto& x, const auto& y) { return x.second > y.second; });
        for (auto& [v, h] : tops) {
            std::vector<std::vector<Rational>> chain(static_cast<size_t>(h));
            chain[static_cast<size_t>(h - 1)] = v;
            for (int t = h - 2; t >= 0; --t)
                chain[static_cast<size_t>(t)] = apply_matrix(a, chain[static_cast<size_t>(t + 1)]);
            for (auto& cvec : chain) p_cols.push_back(cvec);
            out.blocks.push_back({lambda, h});
        }
    }

    out.p = from_columns(p_cols, n);
    out.j = RationalMatrix(n, n);
    int pos = 0;
    for (const JordanBlockInfo& b : out.blocks) {
        for (int t = 0; t < b.size; ++t) {
            out.j.at(pos + t, pos + t) = b.eigenvalue;
            if (t + 1 < b.size) out.j.at(pos + t, pos + t + 1) = 1;
        }
        pos += b.size;
    }
    out.p_inv = inverse(out.p);
    if (!equal(mul(out.p, mul(out.j, out.p_inv)), m))
        throw numerical_error("jordan: exact reconstruction failed");
    return out;
}

bool jordan_bracket_identity_holds(const RationalMatrix& m, const JordanResult& jr) {
    // [M,M] = [P,P^{-1}][J,J][P^{-1},P] via the bracket product law
    // [A,B][C,D] = [AC,DB]: left component P J P^{-1}, right P^{-1}... built
    // stepwise to exercise the law rather than the conclusion.
    RationalMatrix l1 = mul(jr.p, jr.j);        // [P,P^{-1}][J,J] = [PJ, J P^{-1}]
    RationalMatrix r1 = mul(jr.j, jr.p_inv);
    RationalMatrix l2 = mul(l1, jr.p_inv);      // [PJ, JP^{-1}][P^{-1},P] = [PJP^{-1}, P J P^{-1}]
    RationalMatrix r2 = mul(jr.p, r1);
    return equal(l2, m) && equal(r2, m);
}

}  // namespace starlin
