#include "starlin/infinitesimal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "starlin/convert.hpp"
#include "starlin/unpack.hpp"

namespace starlin {

namespace lemmas {

std::vector<std::pair<int, int>> cluster_ranges(const std::vector<double>& lam,
                                                double cluster_tol) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(lam.size());
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || lam[static_cast<size_t>(i - 1)] - lam[static_cast<size_t>(i)] > cluster_tol) {
            out.emplace_back(start, i);
            start = i;
        }
    }
    return out;
}

StarMatrix cluster_correction(const StarMatrix& b, const std::vector<double>& lam,
                              double cluster_tol) {
    const int n = b.rows();
    std::vector<int> cluster_of(static_cast<size_t>(n), 0);
    {
        auto ranges = cluster_ranges(lam, cluster_tol);
        int id = 0;
        for (auto [s, e] : ranges) {
            for (int i = s; i < e; ++i) cluster_of[static_cast<size_t>(i)] = id;
            ++id;
        }
    }
    StarMatrix c(b.algebra(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (cluster_of[static_cast<size_t>(i)] == cluster_of[static_cast<size_t>(j)]) continue;
            double denom = lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)];
            c.set(i, j, scale(b.get(i, j), 1.0 / denom));
        }
    return c;
}

StarMatrix promote_semi_eigenpair(const StarMatrix& u_left, const StarMatrix& u_right) {
    const Algebra* alg = u_left.algebra();
    if (alg != alg_cl101_pos())
        throw precondition_error("promote_semi_eigenpair: expects Cl_{1,0,1} *_1 vectors");
    Scalar e_left = basis_element(alg, 0), e_right = basis_element(alg, 1);

    StarMatrix wl = scalar_mul_right(u_left, e_left);
    double na = std::sqrt(inner(wl, wl)[0]);
    if (na < 1e-12)
        throw degenerate_norm_error("promote_semi_eigenpair: left part is a multiple of delta");
    wl = scale(wl, 1.0 / na);

    StarMatrix wr = scalar_mul_right(u_right, e_right);
    double nb = std::sqrt(inner(wr, wr)[1]);
    if (nb < 1e-12)
        throw degenerate_norm_error("promote_semi_eigenpair: right part is a multiple of delta");
    wr = scale(wr, 1.0 / nb);

    StarMatrix w = add(wl, wr);
    return scalar_mul_right(w, inv_sqrt_selfadjoint(inner(w, w)));
}

StarMatrix normalize_dual_eigenvector(const StarMatrix& v) { return normalize(v); }

}  // namespace lemmas

namespace {

double rel_tol(double tol, const StarMatrix& m) {
    if (tol < 0.0) tol = 1e-8;
    return tol * (1.0 + m.frobenius());
}

void require_self_adjoint_over(const StarMatrix& m, const Algebra* alg, double tol,
                               const char* who) {
    if (m.algebra() != alg)
        throw precondition_error(std::string(who) + ": expects a matrix over " + alg->name);
    if (m.rows() != m.cols()) throw precondition_error(std::string(who) + ": non-square input");
    double dev = sub(m, adjoint(m)).frobenius();
    if (dev > rel_tol(tol, m))
        throw precondition_error(std::string(who) + ": input is not self-adjoint (|H - H*| = " +
                                 std::to_string(dev) + ")");
}

StarMatrix hcat(const StarMatrix& a, const StarMatrix& b) {
    StarMatrix r(a.algebra(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Scalar cl101_dual_scalar(double st, double nst) {
    Scalar s(alg_cl101_pos());
    s[0] = s[1] = st;
    s[2] = s[3] = nst;
    return s;
}

Scalar cl101_pair_scalar(double x, double y) {
    Scalar s(alg_cl101_pos());
    s[0] = x;
    s[1] = y;
    return s;
}

// (1,-1) as an element of Cl_{1,0,1}; conjugates dual eigenvalues
Scalar cl101_one_minus_one() {
    Scalar s(alg_cl101_pos());
    s[0] = 1.0;
    s[1] = -1.0;
    return s;
}

struct SvdRec {
    StarMatrix u;
    std::vector<SvdEigenvalue> eigs;
};

constexpr double kDeltaViability = 1e-3;

SvdRec svdalg_recurse(const StarMatrix& h, double tol) {
    const Algebra* alg = alg_cl101_pos();
    const int n = h.rows();
    if (n == 0) return {StarMatrix(alg, 0, 0), {}};

    StarMatrix unp = pair_svdalg().unpack(h);
    EigenDecomp ed = eig_dual_selfadjoint(unp, tol);
    const double ntol = 1e-8 * (1.0 + h.frobenius());

    // prefer a dual (non-real) eigenvalue; take the largest |nst|
    int best = -1;
    double best_nst = ntol;
    for (int k = 0; k < 2 * n; ++k) {
        double nst = std::abs(ed.D.at(k, k, 1));
        if (nst > best_nst) {
            best_nst = nst;
            best = k;
        }
    }

    StarMatrix w;
    SvdEigenvalue ev;
    if (best >= 0) {
        StarMatrix v = pair_svdalg().rewind(ed.U.col(best));
        w = lemmas::normalize_dual_eigenvector(v);
        ev.is_dual = true;
        ev.st = ed.D.at(best, best, 0);
        ev.nst = ed.D.at(best, best, 1);
        if (ev.nst < 0.0) {  // conjugate-normalise so that nst > 0
            w = scalar_mul_right(w, cl101_one_minus_one());
            ev.nst = -ev.nst;
        }
    } else {
        // all eigenvalues real: search for a viable one-sided pair
        std::vector<StarMatrix> us;
        std::vector<double> lam(static_cast<size_t>(2 * n));
        std::vector<double> na(static_cast<size_t>(2 * n)), nb(static_cast<size_t>(2 * n));
        for (int k = 0; k < 2 * n; ++k) {
            us.push_back(pair_svdalg().rewind(ed.U.col(k)));
            lam[static_cast<size_t>(k)] = ed.D.at(k, k, 0);
            double sa = 0.0, sb = 0.0;
            for (int i = 0; i < n; ++i) {
                sa += us.back().at(i, 0, 0) * us.back().at(i, 0, 0);
                sb += us.back().at(i, 0, 1) * us.back().at(i, 0, 1);
            }
            na[static_cast<size_t>(k)] = std::sqrt(sa);
            nb[static_cast<size_t>(k)] = std::sqrt(sb);
        }
        int pi = -1, pj = -1;
        for (int i = 0; i < 2 * n && pi < 0; ++i) {
            if (na[static_cast<size_t>(i)] <= kDeltaViability) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (nb[static_cast<size_t>(j)] <= kDeltaViability) continue;
                if (std::abs(lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)]) <= ntol)
                    continue;
                pi = i;
                pj = j;
                break;
            }
        }
        if (pi < 0) {
            // no viable pair under the scan threshold: take the best-conditioned one
            double best_min = 1e-8;
            for (int i = 0; i < 2 * n; ++i)
                for (int j = 0; j < 2 * n; ++j) {
                    if (std::abs(lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)]) <= ntol)
                        continue;
                    double m = std::min(na[static_cast<size_t>(i)], nb[static_cast<size_t>(j)]);
                    if (m > best_min) {
                        best_min = m;
                        pi = i;
                        pj = j;
                    }
                }
        }
        if (pi < 0) {
            // every left-viable eigenvalue equals every right-viable one:
            // H is a real multiple of the identity
            double lambda = lam[0];
            StarMatrix ident = StarMatrix::identity(alg, n);
            StarMatrix dev = sub(h, scalar_mul_left(from_real(alg, lambda), ident));
            if (dev.frobenius() > 1e-6 * (1.0 + h.frobenius()))
                throw numerical_error(
                    "spectral_svdalg: real-eigenvalue case found no viable pair but H is not a "
                    "multiple of the identity");
            SvdRec rec;
            rec.u = ident;
            for (int i = 0; i < n; ++i) {
                SvdEigenvalue e;
                e.is_dual = false;
                e.x = lambda;
                e.y = lambda;
                rec.eigs.push_back(e);
            }
            return rec;
        }
        w = lemmas::promote_semi_eigenpair(us[static_cast<size_t>(pi)],
                                           us[static_cast<size_t>(pj)]);
        ev.is_dual = false;
        ev.x = lam[static_cast<size_t>(pi)];
        ev.y = lam[static_cast<size_t>(pj)];
    }

    if (n == 1) {
        SvdRec rec;
        rec.u = w;
        rec.eigs.push_back(ev);
        return rec;
    }
    StarMatrix x = complement_basis({w}, n, alg);
    StarMatrix h2 = mul(adjoint(x), mul(h, x));
    SvdRec inner_rec = svdalg_recurse(h2, tol);
    SvdRec rec;
    rec.u = hcat(w, mul(x, inner_rec.u));
    rec.eigs.push_back(ev);
    rec.eigs.insert(rec.eigs.end(), inner_rec.eigs.begin(), inner_rec.eigs.end());
    return rec;
}

}  // namespace

EigenDecomp spectral_svdalg(const StarMatrix& h, double tol,
                            std::vector<SvdEigenvalue>* eigenvalues) {
    require_self_adjoint_over(h, alg_cl101_pos(), tol, "spectral_svdalg");
    detail::SpectralCallGuard guard;
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);
    SvdRec rec = svdalg_recurse(hs, tol);

    // canonical layout: dual block first (st desc, nst desc), then pairs
    const int n = h.rows();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto key_less = [&](int a, int b) {
        const SvdEigenvalue &ea = rec.eigs[static_cast<size_t>(a)],
                            &eb = rec.eigs[static_cast<size_t>(b)];
        if (ea.is_dual != eb.is_dual) return ea.is_dual;  // duals first
        if (ea.is_dual) {
            if (ea.st != eb.st) return ea.st > eb.st;
            return ea.nst > eb.nst;
        }
        if (ea.x != eb.x) return ea.x > eb.x;
        return ea.y > eb.y;
    };
    std::stable_sort(order.begin(), order.end(), key_less);

    EigenDecomp d;
    d.U = StarMatrix(alg_cl101_pos(), n, n);
    d.D = StarMatrix(alg_cl101_pos(), n, n);
    std::vector<SvdEigenvalue> sorted_eigs;
    for (int j = 0; j < n; ++j) {
        int src = order[static_cast<size_t>(j)];
        d.U.set_col(j, rec.u.col(src));
        const SvdEigenvalue& e = rec.eigs[static_cast<size_t>(src)];
        d.D.set(j, j, e.is_dual ? cl101_dual_scalar(e.st, e.nst) : cl101_pair_scalar(e.x, e.y));
        sorted_eigs.push_back(e);
    }
    fill_residuals(d, h);
    if (eigenvalues) *eigenvalues = std::move(sorted_eigs);
    return d;
}

SvdAlgSpectrum spectrum_svdalg(const StarMatrix& h, double tol) {
    std::vector<SvdEigenvalue> eigs;
    spectral_svdalg(h, tol, &eigs);
    SvdAlgSpectrum sp;
    for (const SvdEigenvalue& e : eigs) {
        if (e.is_dual)
            sp.C.push_back({e.st, e.nst});
        else {
            sp.L.push_back(e.x);
            sp.R.push_back(e.y);
        }
    }
    std::sort(sp.C.begin(), sp.C.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] > b[0];
        return a[1] > b[1];
    });
    std::sort(sp.L.begin(), sp.L.end(), std::greater<double>());
    std::sort(sp.R.begin(), sp.R.end(), std::greater<double>());
    return sp;
}

// --------------------------------------------------------- Takagi algebra

TakagiCoreResult takagi_core(const StarMatrix& s0, double tol) {
    if (s0.algebra() != alg_complex())
        throw precondition_error("takagi_core: expects a complex matrix");
    if (s0.rows() != s0.cols()) throw precondition_error("takagi_core: non-square input");
    double dev = sub(s0, transpose_plain(s0)).frobenius();
    if (dev > rel_tol(tol, s0))
        throw precondition_error("takagi_core: input not complex-symmetric (|S - S^T| = " +
                                 std::to_string(dev) + ")");
    detail::SpectralCallGuard guard;
    StarMatrix s = scale(add(s0, transpose_plain(s0)), 0.5);

    TakagiCoreResult out;
    const int n0 = s.rows();
    out.u = StarMatrix(alg_complex(), n0, n0);

    // accumulated basis of the original space for the current restriction
    StarMatrix basis = StarMatrix::identity(alg_complex(), n0);
    StarMatrix cur = s;
    Scalar iunit = basis_element(alg_complex(), 1);
    for (int step = 0; step < n0; ++step) {
        const int n = cur.rows();
        StarMatrix re = re_part(cur), im = im_part(cur);
        StarMatrix t(alg_real(), 2 * n, 2 * n);
        t.set_block(0, 0, re);
        t.set_block(0, n, im);
        t.set_block(n, 0, im);
        t.set_block(n, n, neg(re));
        JacobiResult jr = jacobi_symmetric(t);
        int idx = std::abs(jr.values.front()) >= std::abs(jr.values.back()) ? 0 : 2 * n - 1;
        double mu = jr.values[static_cast<size_t>(idx)];
        StarMatrix c = jr.vectors.col(idx);
        StarMatrix u = complex_from(c.block(0, 0, n, 1), c.block(n, 0, n, 1));
        if (mu < 0.0) {
            u = scalar_mul_right(u, iunit);  // flips the sign of the Takagi value
            mu = -mu;
        }
        u = scale(u, 1.0 / u.frobenius());
        // only a +-1 freedom remains; pin it by the first sizable component
        for (int i = 0; i < n; ++i) {
            double rev = u.at(i, 0, 0), imv = u.at(i, 0, 1);
            if (std::hypot(rev, imv) > 1e-8) {
                if (rev < -1e-12 || (std::abs(rev) <= 1e-12 && imv < 0.0)) u = neg(u);
                break;
            }
        }
        out.u.set_col(step, mul(basis, u));
        out.d.push_back(mu);
        if (n == 1) break;
        StarMatrix x = complement_basis({u}, n, alg_complex());
        cur = mul(adjoint(x), mul(cur, mat_conj(x)));
        cur = scale(add(cur, transpose_plain(cur)), 0.5);
        basis = mul(basis, x);
    }

    // descending Takagi values
    std::vector<int> order(out.d.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return out.d[static_cast<size_t>(a)] > out.d[static_cast<size_t>(b)]; });
    StarMatrix u2 = out.u;
    std::vector<double> d2;
    for (size_t j = 0; j < order.size(); ++j) {
        u2.set_col(static_cast<int>(j), out.u.col(order[j]));
        d2.push_back(out.d[static_cast<size_t>(order[j])]);
    }
    out.u = u2;
    out.d = d2;
    return out;
}

SkewTakagiCoreResult skew_takagi_core(const StarMatrix& s0, double tol) {
    if (s0.algebra() != alg_complex())
        throw precondition_error("skew_takagi_core: expects a complex matrix");
    if (s0.rows() != s0.cols()) throw precondition_error("skew_takagi_core: non-square input");
    double dev = add(s0, transpose_plain(s0)).frobenius();
    if (dev > rel_tol(tol, s0))
        throw precondition_error("skew_takagi_core: input not skew-symmetric (|S + S^T| = " +
                                 std::to_string(dev) + ")");
    detail::SpectralCallGuard guard;
    StarMatrix s = scale(sub(s0, transpose_plain(s0)), 0.5);

    const int n0 = s.rows();
    SkewTakagiCoreResult out;
    out.u = StarMatrix(alg_complex(), n0, n0);
    out.d = StarMatrix(alg_real(), n0, n0);

    StarMatrix basis = StarMatrix::identity(alg_complex(), n0);
    StarMatrix cur = s;
    int col = 0;
    const double ztol = rel_tol(tol, s);
    while (cur.rows() > 0) {
        const int n = cur.rows();
        StarMatrix re = re_part(cur), im = im_part(cur);
        StarMatrix t(alg_real(), 2 * n, 2 * n);
        t.set_block(0, 0, re);
        t.set_block(0, n, im);
        t.set_block(n, 0, im);
        t.set_block(n, n, neg(re));
        EigenDecomp canon = canon_real_skew(t, tol);
        if (canon.mus.empty() || canon.mus.front() <= ztol) break;  // rest is zero
        double mu = canon.mus.front();
        StarMatrix c1 = canon.U.col(0), c2 = canon.U.col(1);
        StarMatrix up = complex_from(c1.block(0, 0, n, 1), c1.block(n, 0, n, 1));
        StarMatrix vp = complex_from(c2.block(0, 0, n, 1), c2.block(n, 0, n, 1));
        up = scale(up, 1.0 / up.frobenius());
        vp = sub(vp, scalar_mul_right(up, inner(up, vp)));
        vp = scale(vp, 1.0 / vp.frobenius());
        out.u.set_col(col, mul(basis, up));
        out.u.set_col(col + 1, mul(basis, vp));
        out.d.at(col, col + 1, 0) = -mu;
        out.d.at(col + 1, col, 0) = mu;
        out.mus.push_back(mu);
        col += 2;
        if (n == 2) { cur = StarMatrix(alg_complex(), 0, 0); break; }
        StarMatrix x = complement_basis({up, vp}, n, alg_complex());
        cur = mul(adjoint(x), mul(cur, mat_conj(x)));
        cur = scale(sub(cur, transpose_plain(cur)), 0.5);
        basis = mul(basis, x);
    }
    // remaining directions carry the zero blocks
    if (col < n0) {
        for (int j = 0; j < n0 - col; ++j) out.u.set_col(col + j, basis.col(j));
    }
    return out;
}

namespace {

// shared skeleton for the three block-perturbation theorems
struct ClusterSplit {
    StarMatrix u0_alg;       // base unitary embedded into the delta algebra
    StarMatrix p;            // I + C delta
    StarMatrix h2;           // P U0* H U0 P*
    std::vector<double> lam; // descending standard-part eigenvalues
    std::vector<std::pair<int, int>> ranges;
};

ClusterSplit split_by_standard_part(const StarMatrix& hs, const EigenDecomp& base_eig,
                                    double tol) {
    const Algebra* alg = hs.algebra();
    ClusterSplit cs;
    const int n = hs.rows();
    cs.lam.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cs.lam[static_cast<size_t>(i)] = base_eig.D.at(i, i, 0);
    cs.u0_alg = embed_base(alg, base_eig.U);
    StarMatrix h1 = mul(adjoint(cs.u0_alg), mul(hs, cs.u0_alg));
    StarMatrix b1 = mat_delta_part(h1);
    const double ctol = 1e-8 * (1.0 + hs.frobenius());
    StarMatrix c = lemmas::cluster_correction(b1, cs.lam, ctol);
    cs.p = mat_join_delta(alg, StarMatrix::identity(base_eig.U.algebra(), n), c);
    cs.h2 = mul(cs.p, mul(h1, adjoint(cs.p)));
    cs.ranges = lemmas::cluster_ranges(cs.lam, ctol);
    (void)tol;
    return cs;
}

}  // namespace

EigenDecomp spectral_takagi_alg(const StarMatrix& h, double tol) {
    require_self_adjoint_over(h, alg_cl011_pos(), tol, "spectral_takagi_alg");
    detail::SpectralCallGuard guard;
    const Algebra* alg = alg_cl011_pos();
    const int n = h.rows();
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);

    EigenDecomp base = eig_complex_hermitian(mat_base_part(hs), tol);
    ClusterSplit cs = split_by_standard_part(hs, base, tol);

    StarMatrix qbig = StarMatrix::identity(alg_complex(), n);
    std::vector<double> dvals(static_cast<size_t>(n), 0.0);
    StarMatrix bfull = mat_delta_part(cs.h2);
    for (auto [s0, e0] : cs.ranges) {
        const int sz = e0 - s0;
        StarMatrix b = bfull.block(s0, s0, sz, sz);
        b = scale(add(b, transpose_plain(b)), 0.5);
        TakagiCoreResult tc = takagi_core(b, tol);
        qbig.set_block(s0, s0, adjoint(tc.u));
        for (int t = 0; t < sz; ++t) dvals[static_cast<size_t>(s0 + t)] = tc.d[static_cast<size_t>(t)];
    }
    StarMatrix qalg = embed_base(alg, qbig);

    EigenDecomp d;
    d.U = mul(cs.u0_alg, mul(adjoint(cs.p), adjoint(qalg)));
    StarMatrix zr(alg_real(), n, n);
    d.D = mat_join_delta(alg, complex_from(real_diag(cs.lam), zr),
                         complex_from(real_diag(dvals), zr));
    fill_residuals(d, h);
    return d;
}

EigenDecomp spectral_skewtakagi_alg(const StarMatrix& h, double tol) {
    require_self_adjoint_over(h, alg_cl011_neg(), tol, "spectral_skewtakagi_alg");
    detail::SpectralCallGuard guard;
    const Algebra* alg = alg_cl011_neg();
    const int n = h.rows();
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);

    EigenDecomp base = eig_complex_hermitian(mat_base_part(hs), tol);
    ClusterSplit cs = split_by_standard_part(hs, base, tol);

    StarMatrix qbig = StarMatrix::identity(alg_complex(), n);
    StarMatrix dblocks(alg_real(), n, n);
    std::vector<double> muvals;
    StarMatrix bfull = mat_delta_part(cs.h2);
    for (auto [s0, e0] : cs.ranges) {
        const int sz = e0 - s0;
        StarMatrix b = bfull.block(s0, s0, sz, sz);
        b = scale(sub(b, transpose_plain(b)), 0.5);
        SkewTakagiCoreResult sc = skew_takagi_core(b, tol);
        qbig.set_block(s0, s0, adjoint(sc.u));
        dblocks.set_block(s0, s0, sc.d);
    }
    StarMatrix qalg = embed_base(alg, qbig);

    EigenDecomp d;
    d.U = mul(cs.u0_alg, mul(adjoint(cs.p), adjoint(qalg)));
    StarMatrix zr(alg_real(), n, n);
    d.D = mat_join_delta(alg, complex_from(real_diag(cs.lam), zr),
                         complex_from(dblocks, zr));
    for (int i = 0; i + 1 < n; ++i)
        if (d.D.at(i + 1, i, 2) != 0.0) d.mus.push_back(d.D.at(i + 1, i, 2));
    fill_residuals(d, h);
    return d;
}

EigenDecomp spectral_quatdual(const StarMatrix& h, double tol) {
    require_self_adjoint_over(h, alg_quatdual(), tol, "spectral_quatdual");
    detail::SpectralCallGuard guard;
    const Algebra* alg = alg_quatdual();
    const int n = h.rows();
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);

    EigenDecomp base = eig_quaternion_hermitian(mat_base_part(hs), tol);
    ClusterSplit cs = split_by_standard_part(hs, base, tol);

    StarMatrix qbig = StarMatrix::identity(alg_quaternion(), n);
    StarMatrix ddelta(alg_quaternion(), n, n);
    StarMatrix bfull = mat_delta_part(cs.h2);
    for (auto [s0, e0] : cs.ranges) {
        const int sz = e0 - s0;
        StarMatrix b = bfull.block(s0, s0, sz, sz);
        b = scale(sub(b, adjoint(b)), 0.5);
        EigenDecomp qs = canon_quaternion_skew(b, tol);
        qbig.set_block(s0, s0, adjoint(qs.U));
        ddelta.set_block(s0, s0, qs.D);
    }
    StarMatrix qalg = embed_base(alg, qbig);

    EigenDecomp d;
    d.U = mul(cs.u0_alg, mul(adjoint(cs.p), adjoint(qalg)));
    StarMatrix zr(alg_real(), n, n);
    d.D = mat_join_delta(alg, quaternion_from(real_diag(cs.lam), zr, zr, zr), ddelta);
    for (int i = 0; i < n; ++i)
        if (d.D.at(i, i, 5) != 0.0) d.mus.push_back(d.D.at(i, i, 5));
    fill_residuals(d, h);
    return d;
}

EigenDecomp spectral_cl101_neg(const StarMatrix& h, double tol,
                               std::vector<SvdEigenvalue>* eigenvalues) {
    require_self_adjoint_over(h, alg_cl101_neg(), tol, "spectral_cl101_neg");
    detail::SpectralCallGuard guard;
    StarMatrix hp = iso_cl101(h);
    EigenDecomp inner_dec = spectral_svdalg(hp, tol, eigenvalues);
    EigenDecomp d;
    d.U = iso_cl101(inner_dec.U);
    d.D = iso_cl101(inner_dec.D);
    fill_residuals(d, h);
    return d;
}

}  // namespace starlin
