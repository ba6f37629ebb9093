#include "starlin/base_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "starlin/convert.hpp"
#include "starlin/unpack.hpp"

namespace starlin {

namespace {

thread_local long g_spectral_calls = 0;
thread_local int g_spectral_depth = 0;

double rel_tol(double tol, const StarMatrix& m) {
    if (tol < 0.0) tol = 1e-8;
    return tol * (1.0 + m.frobenius());
}

void require_square(const StarMatrix& m, const char* who) {
    if (m.rows() != m.cols()) throw precondition_error(std::string(who) + ": non-square input");
}

void require_self_adjoint(const StarMatrix& m, double tol, const char* who) {
    require_square(m, who);
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

}  // namespace

long spectral_call_count() { return g_spectral_calls; }
void reset_spectral_call_count() { g_spectral_calls = 0; }

namespace detail {
SpectralCallGuard::SpectralCallGuard() {
    if (g_spectral_depth++ == 0) ++g_spectral_calls;
}
SpectralCallGuard::~SpectralCallGuard() { --g_spectral_depth; }
}  // namespace detail

void fill_residuals(EigenDecomp& d, const StarMatrix& h) {
    StarMatrix rec = mul(d.U, mul(d.D, adjoint(d.U)));
    d.recon_residual = sub(rec, h).frobenius();
    StarMatrix g = mul(adjoint(d.U), d.U);
    d.unitary_residual = sub(g, StarMatrix::identity(d.U.algebra(), d.U.cols())).frobenius();
}

// ----------------------------------------------------------------- Jacobi

JacobiResult jacobi_symmetric(const StarMatrix& s) {
    const int n = s.rows();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = 0.5 * (s.at(i, j, 0) + s.at(j, i, 0));
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    const double conv = 1e-14 * norm;

    for (int sweep = 0; sweep < 100 && n > 1; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * A(i, j) * A(i, j);
        off = std::sqrt(off);
        if (off <= conv) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) <= conv / (10.0 * n)) continue;
                const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                const double app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = A(i, p), aiq = A(i, q);
                        A(i, p) = c * aip - sn * aiq;
                        A(p, i) = A(i, p);
                        A(i, q) = sn * aip + c * aiq;
                        A(q, i) = A(i, q);
                    }
                    const double vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip - sn * viq;
                    V(i, q) = sn * vip + c * viq;
                }
            }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });

    JacobiResult r;
    r.values.resize(static_cast<size_t>(n));
    r.vectors = StarMatrix(alg_real(), n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<size_t>(j)];
        r.values[static_cast<size_t>(j)] = A(src, src);
        double flip = 1.0;
        for (int i = 0; i < n; ++i)
            if (std::abs(V(i, src)) > 1e-8) {
                flip = V(i, src) < 0.0 ? -1.0 : 1.0;
                break;
            }
        for (int i = 0; i < n; ++i) r.vectors.at(i, j, 0) = flip * V(i, src);
    }
    return r;
}

EigenDecomp eig_real_symmetric(const StarMatrix& s, double tol) {
    require_square(s, "eig_real_symmetric");
    if (s.algebra() != alg_real())
        throw precondition_error("eig_real_symmetric: expects a real matrix");
    double dev = sub(s, adjoint(s)).frobenius();
    if (dev > rel_tol(tol, s))
        throw precondition_error("eig_real_symmetric: asymmetry " + std::to_string(dev) +
                                 " beyond tolerance");
    detail::SpectralCallGuard guard;
    JacobiResult jr = jacobi_symmetric(s);
    EigenDecomp d;
    d.U = jr.vectors;
    d.D = real_diag(jr.values);
    fill_residuals(d, s);
    return d;
}

// ------------------------------------------------- complex / quaternion

namespace {

void phase_fix_complex(StarMatrix& v) {
    for (int i = 0; i < v.rows(); ++i) {
        double re = v.at(i, 0, 0), im = v.at(i, 0, 1);
        double mag = std::hypot(re, im);
        if (mag > 1e-8) {
            Scalar ph(alg_complex());
            ph[0] = re / mag;
            ph[1] = -im / mag;
            v = scalar_mul_right(v, ph);
            return;
        }
    }
}

struct ComplexEig {
    std::vector<double> values;
    StarMatrix u;
};

ComplexEig eig_complex_impl(const StarMatrix& h) {
    const int n = h.rows();
    if (n == 0) return {{}, StarMatrix(alg_complex(), 0, 0)};
    StarMatrix t = pair_complex().unpack(h);
    JacobiResult jr = jacobi_symmetric(t);
    double lambda = jr.values[0];
    StarMatrix v = pair_complex().rewind(jr.vectors.col(0));
    double nrm = v.frobenius();
    v = scale(v, 1.0 / nrm);
    phase_fix_complex(v);
    if (n == 1) {
        ComplexEig r;
        r.values = {lambda};
        r.u = v;
        return r;
    }
    StarMatrix x = complement_basis({v}, n, alg_complex());
    StarMatrix h2 = mul(adjoint(x), mul(h, x));
    ComplexEig rec = eig_complex_impl(h2);
    ComplexEig r;
    r.values.push_back(lambda);
    r.values.insert(r.values.end(), rec.values.begin(), rec.values.end());
    r.u = hcat(v, mul(x, rec.u));
    return r;
}

}  // namespace

EigenDecomp eig_complex_hermitian(const StarMatrix& h, double tol) {
    if (h.algebra() != alg_complex())
        throw precondition_error("eig_complex_hermitian: expects a complex matrix");
    require_self_adjoint(h, tol, "eig_complex_hermitian");
    detail::SpectralCallGuard guard;
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);
    ComplexEig ce = eig_complex_impl(hs);
    EigenDecomp d;
    d.U = ce.u;
    std::vector<int> order(ce.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ce.values[static_cast<size_t>(a)] > ce.values[static_cast<size_t>(b)];
    });
    StarMatrix u2 = d.U;
    std::vector<double> vals;
    for (size_t j = 0; j < order.size(); ++j) {
        u2.set_col(static_cast<int>(j), d.U.col(order[j]));
        vals.push_back(ce.values[static_cast<size_t>(order[j])]);
    }
    d.U = u2;
    d.D = complex_from(real_diag(vals), StarMatrix(alg_real(), h.rows(), h.rows()));
    fill_residuals(d, h);
    return d;
}

namespace {

void phase_fix_quaternion(StarMatrix& v) {
    for (int i = 0; i < v.rows(); ++i) {
        Scalar q = v.get(i, 0);
        double mag = std::sqrt(q.norm2());
        if (mag > 1e-8) {
            Scalar ph = involute(q);
            ph = scale(ph, 1.0 / mag);
            v = scalar_mul_right(v, ph);
            return;
        }
    }
}

struct QuatEig {
    std::vector<double> values;
    StarMatrix u;
};

QuatEig eig_quaternion_impl(const StarMatrix& h) {
    const int n = h.rows();
    if (n == 0) return {{}, StarMatrix(alg_quaternion(), 0, 0)};
    StarMatrix nmat = pair_quaternion_skew().unpack(h);
    EigenDecomp ce = eig_complex_hermitian(nmat);
    double lambda = ce.D.at(0, 0, 0);
    StarMatrix v = pair_quaternion_skew().rewind(ce.U.col(0));
    v = scale(v, 1.0 / v.frobenius());
    phase_fix_quaternion(v);
    if (n == 1) return {{lambda}, v};
    StarMatrix x = complement_basis({v}, n, alg_quaternion());
    StarMatrix h2 = mul(adjoint(x), mul(h, x));
    QuatEig rec = eig_quaternion_impl(h2);
    QuatEig r;
    r.values.push_back(lambda);
    r.values.insert(r.values.end(), rec.values.begin(), rec.values.end());
    r.u = hcat(v, mul(x, rec.u));
    return r;
}

}  // namespace

EigenDecomp eig_quaternion_hermitian(const StarMatrix& h, double tol) {
    if (h.algebra() != alg_quaternion())
        throw precondition_error("eig_quaternion_hermitian: expects a quaternion matrix");
    require_self_adjoint(h, tol, "eig_quaternion_hermitian");
    detail::SpectralCallGuard guard;
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);
    QuatEig qe = eig_quaternion_impl(hs);
    EigenDecomp d;
    d.U = qe.u;
    std::vector<int> order(qe.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return qe.values[static_cast<size_t>(a)] > qe.values[static_cast<size_t>(b)];
    });
    StarMatrix u2 = d.U;
    std::vector<double> vals;
    for (size_t j = 0; j < order.size(); ++j) {
        u2.set_col(static_cast<int>(j), d.U.col(order[j]));
        vals.push_back(qe.values[static_cast<size_t>(order[j])]);
    }
    d.U = u2;
    StarMatrix zr(alg_real(), h.rows(), h.rows());
    d.D = quaternion_from(real_diag(vals), zr, zr, zr);
    fill_residuals(d, h);
    return d;
}

// ------------------------------------------------------- real skew canon

EigenDecomp canon_real_skew(const StarMatrix& s0, double tol) {
    require_square(s0, "canon_real_skew");
    if (s0.algebra() != alg_real())
        throw precondition_error("canon_real_skew: expects a real matrix");
    double dev = add(s0, adjoint(s0)).frobenius();
    if (dev > rel_tol(tol, s0))
        throw precondition_error("canon_real_skew: symmetry violation |S + S^T| = " +
                                 std::to_string(dev));
    detail::SpectralCallGuard guard;
    const int n = s0.rows();
    StarMatrix s = scale(sub(s0, adjoint(s0)), 0.5);
    StarMatrix is = complex_from(StarMatrix(alg_real(), n, n), s);
    EigenDecomp ce = eig_complex_hermitian(is);
    const double thr = rel_tol(tol, s);

    EigenDecomp d;
    d.U = StarMatrix(alg_real(), n, n);
    d.D = StarMatrix(alg_real(), n, n);
    int col = 0;
    std::vector<StarMatrix> placed;  // real columns, for kernel GS anchoring
    for (int k = 0; k < n; ++k) {
        double mu = ce.D.at(k, k, 0);
        if (mu <= thr) continue;
        StarMatrix z = ce.U.col(k);
        StarMatrix x = re_part(z), y = im_part(z);
        StarMatrix c1 = scale(x, std::sqrt(2.0)), c2 = scale(y, std::sqrt(2.0));
        c1 = scale(c1, 1.0 / c1.frobenius());
        c2 = sub(c2, scale(c1, inner(c1, c2)[0]));
        c2 = scale(c2, 1.0 / c2.frobenius());
        d.U.set_col(col, c1);
        d.U.set_col(col + 1, c2);
        d.D.at(col, col + 1, 0) = -mu;
        d.D.at(col + 1, col, 0) = mu;
        d.mus.push_back(mu);
        placed.push_back(c1);
        placed.push_back(c2);
        col += 2;
    }
    // kernel: real span of the remaining eigenvectors, picked by largest
    // residual against everything placed so far
    if (col < n) {
        std::vector<StarMatrix> cand;
        for (int k = 0; k < n; ++k) {
            if (std::abs(ce.D.at(k, k, 0)) > thr) continue;
            cand.push_back(re_part(ce.U.col(k)));
            cand.push_back(im_part(ce.U.col(k)));
        }
        while (col < n) {
            int best = -1;
            double best_norm = 0.3;
            StarMatrix best_r;
            for (size_t ci = 0; ci < cand.size(); ++ci) {
                StarMatrix w = cand[ci];
                for (int pass = 0; pass < 2; ++pass)
                    for (const StarMatrix& p : placed) w = sub(w, scale(p, inner(p, w)[0]));
                double nrm = w.frobenius();
                if (nrm > best_norm) {
                    best_norm = nrm;
                    best = static_cast<int>(ci);
                    best_r = w;
                }
            }
            if (best < 0)
                throw numerical_error("canon_real_skew: failed to complete the kernel basis");
            StarMatrix w = scale(best_r, 1.0 / best_norm);
            placed.push_back(w);
            d.U.set_col(col, w);
            ++col;
        }
    }
    fill_residuals(d, s0);
    return d;
}

// -------------------------------------------------- quaternion skew canon

namespace {

// J conj(z) for the quaternionic structure on C^{2n}
StarMatrix j_conj(const StarMatrix& z) {
    const int n = z.rows() / 2;
    StarMatrix top = z.block(0, 0, n, 1), bot = z.block(n, 0, n, 1);
    StarMatrix r(alg_complex(), 2 * n, 1);
    r.set_block(0, 0, neg(mat_conj(bot)));
    r.set_block(n, 0, mat_conj(top));
    return r;
}

}  // namespace

EigenDecomp canon_quaternion_skew(const StarMatrix& m0, double tol) {
    require_square(m0, "canon_quaternion_skew");
    if (m0.algebra() != alg_quaternion())
        throw precondition_error("canon_quaternion_skew: expects a quaternion matrix");
    double dev = add(m0, adjoint(m0)).frobenius();
    if (dev > rel_tol(tol, m0))
        throw precondition_error("canon_quaternion_skew: input not skew-Hermitian (|M + M*| = " +
                                 std::to_string(dev) + ")");
    detail::SpectralCallGuard guard;
    const int n = m0.rows();
    StarMatrix m = scale(sub(m0, adjoint(m0)), 0.5);
    StarMatrix nmat = pair_quaternion_skew().unpack(m);
    // K = -i N is Hermitian
    StarMatrix k = complex_from(im_part(nmat), neg(re_part(nmat)));
    EigenDecomp ce = eig_complex_hermitian(k);
    const double thr = rel_tol(tol, m);

    EigenDecomp d;
    d.U = StarMatrix(alg_quaternion(), n, n);
    d.D = StarMatrix(alg_quaternion(), n, n);
    int col = 0;
    for (int idx = 0; idx < 2 * n; ++idx) {
        double nu = ce.D.at(idx, idx, 0);
        if (nu <= thr) continue;
        StarMatrix v = pair_quaternion_skew().rewind(ce.U.col(idx));
        v = scale(v, 1.0 / v.frobenius());
        d.U.set_col(col, v);
        Scalar ent(alg_quaternion());
        ent[1] = nu;  // mu * i
        d.D.set(col, col, ent);
        d.mus.push_back(nu);
        ++col;
    }
    // kernel: pick a half-basis compatible with the quaternionic structure,
    // by largest residual against the selected vectors and their J-partners
    std::vector<StarMatrix> cand;
    for (int idx = 0; idx < 2 * n; ++idx)
        if (std::abs(ce.D.at(idx, idx, 0)) <= thr) cand.push_back(ce.U.col(idx));
    std::vector<StarMatrix> sel;
    while (col < n) {
        int best = -1;
        double best_norm = 0.3;
        StarMatrix best_r;
        for (size_t ci = 0; ci < cand.size(); ++ci) {
            StarMatrix w = cand[ci];
            for (int pass = 0; pass < 2; ++pass)
                for (const StarMatrix& sv : sel) {
                    w = sub(w, scalar_mul_right(sv, inner(sv, w)));
                    StarMatrix js = j_conj(sv);
                    w = sub(w, scalar_mul_right(js, inner(js, w)));
                }
            double nrm = w.frobenius();
            if (nrm > best_norm) {
                best_norm = nrm;
                best = static_cast<int>(ci);
                best_r = w;
            }
        }
        if (best < 0)
            throw numerical_error("canon_quaternion_skew: failed to complete the kernel basis");
        StarMatrix w = scale(best_r, 1.0 / best_norm);
        sel.push_back(w);
        StarMatrix v = pair_quaternion_skew().rewind(w);
        v = scale(v, 1.0 / v.frobenius());
        d.U.set_col(col, v);
        ++col;
    }
    fill_residuals(d, m0);
    return d;
}

// ----------------------------------------------------------- dual numbers

EigenDecomp eig_dual_selfadjoint(const StarMatrix& h, double tol) {
    if (h.algebra() != alg_dual())
        throw precondition_error("eig_dual_selfadjoint: expects a dual-number matrix");
    require_self_adjoint(h, tol, "eig_dual_selfadjoint");
    detail::SpectralCallGuard guard;
    const int n = h.rows();
    StarMatrix hs = scale(add(h, adjoint(h)), 0.5);
    StarMatrix a = st_part(hs), b = nst_part(hs);

    JacobiResult jr = jacobi_symmetric(a);
    const std::vector<double>& lam = jr.values;
    StarMatrix q0 = jr.vectors;
    StarMatrix b1 = mul(adjoint(q0), mul(b, q0));

    const double ctol = 1e-8 * (1.0 + h.frobenius());
    std::vector<int> cluster_of(static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i)
        cluster_of[static_cast<size_t>(i)] =
            (lam[static_cast<size_t>(i - 1)] - lam[static_cast<size_t>(i)] <= ctol)
                ? cluster_of[static_cast<size_t>(i - 1)]
                : cluster_of[static_cast<size_t>(i - 1)] + 1;

    // first-order decoupling across clusters; exactly orthogonal since eps^2 = 0
    StarMatrix c(alg_real(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cluster_of[static_cast<size_t>(i)] != cluster_of[static_cast<size_t>(j)])
                c.at(i, j, 0) =
                    b1.at(i, j, 0) / (lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)]);

    // per-cluster eps blocks
    StarMatrix rbig(alg_real(), n, n);
    std::vector<double> beta(static_cast<size_t>(n), 0.0);
    std::vector<double> lam_out(static_cast<size_t>(n), 0.0);
    int start = 0;
    while (start < n) {
        int end = start;
        while (end < n && cluster_of[static_cast<size_t>(end)] == cluster_of[static_cast<size_t>(start)])
            ++end;
        const int sz = end - start;
        JacobiResult cj = jacobi_symmetric(b1.block(start, start, sz, sz));
        rbig.set_block(start, start, cj.vectors);
        for (int t = 0; t < sz; ++t) {
            beta[static_cast<size_t>(start + t)] = cj.values[static_cast<size_t>(t)];
            lam_out[static_cast<size_t>(start + t)] = lam[static_cast<size_t>(start + t)];
        }
        start = end;
    }

    StarMatrix ust = mul(q0, rbig);
    StarMatrix unst = neg(mul(q0, mul(c, rbig)));

    EigenDecomp d;
    d.U = dual_from(ust, unst);
    d.D = dual_from(real_diag(lam_out), real_diag(beta));
    fill_residuals(d, h);
    return d;
}

}  // namespace starlin
