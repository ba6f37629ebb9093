#include "starlin/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace starlin {

StarMatrix StarMatrix::identity(const Algebra* alg, int n) {
    StarMatrix m(alg, n, n);
    Scalar u = one(alg);
    for (int i = 0; i < n; ++i) m.set(i, i, u);
    return m;
}

Scalar StarMatrix::get(int i, int j) const {
    Scalar v(alg_);
    for (int k = 0; k < alg_->dim; ++k) v[k] = at(i, j, k);
    return v;
}

void StarMatrix::set(int i, int j, const Scalar& v) {
    for (int k = 0; k < alg_->dim; ++k) at(i, j, k) = v[k];
}

StarMatrix StarMatrix::block(int r0, int c0, int r, int c) const {
    StarMatrix b(alg_, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < alg_->dim; ++k) b.at(i, j, k) = at(r0 + i, c0 + j, k);
    return b;
}

void StarMatrix::set_block(int r0, int c0, const StarMatrix& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (int k = 0; k < alg_->dim; ++k) at(r0 + i, c0 + j, k) = b.at(i, j, k);
}

double StarMatrix::frobenius() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

namespace {

void require_same_algebra(const StarMatrix& x, const StarMatrix& y) {
    if (x.algebra() != y.algebra())
        throw algebra_mismatch_error("matrix operands belong to different algebras");
}

}  // namespace

StarMatrix add(const StarMatrix& x, const StarMatrix& y) {
    require_same_algebra(x, y);
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw precondition_error("add: shape mismatch");
    StarMatrix r(x.algebra(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < x.algebra()->dim; ++k) r.at(i, j, k) = x.at(i, j, k) + y.at(i, j, k);
    return r;
}

StarMatrix sub(const StarMatrix& x, const StarMatrix& y) {
    require_same_algebra(x, y);
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw precondition_error("sub: shape mismatch");
    StarMatrix r(x.algebra(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < x.algebra()->dim; ++k) r.at(i, j, k) = x.at(i, j, k) - y.at(i, j, k);
    return r;
}

StarMatrix neg(const StarMatrix& x) { return scale(x, -1.0); }

StarMatrix scale(const StarMatrix& x, double t) {
    StarMatrix r(x.algebra(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < x.algebra()->dim; ++k) r.at(i, j, k) = t * x.at(i, j, k);
    return r;
}

StarMatrix mul(const StarMatrix& x, const StarMatrix& y) {
    require_same_algebra(x, y);
    if (x.cols() != y.rows()) throw precondition_error("mul: shape mismatch");
    const Algebra* a = x.algebra();
    StarMatrix r(a, x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int l = 0; l < x.cols(); ++l) {
            // accumulate r(i,j) += x(i,l) * y(l,j) via structure constants
            for (int p = 0; p < a->dim; ++p) {
                const double xv = x.at(i, l, p);
                if (xv == 0.0) continue;
                for (int q = 0; q < a->dim; ++q) {
                    for (const Algebra::Term& t : a->mul_terms(p, q)) {
                        const double coeff = xv * t.c;
                        for (int j = 0; j < y.cols(); ++j)
                            r.at(i, j, t.k) += coeff * y.at(l, j, q);
                    }
                }
            }
        }
    return r;
}

StarMatrix scalar_mul_left(const Scalar& s, const StarMatrix& x) {
    StarMatrix r(x.algebra(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(i, j, mul(s, x.get(i, j)));
    return r;
}

StarMatrix scalar_mul_right(const StarMatrix& x, const Scalar& s) {
    StarMatrix r(x.algebra(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(i, j, mul(x.get(i, j), s));
    return r;
}

StarMatrix adjoint(const StarMatrix& x) {
    StarMatrix r(x.algebra(), x.cols(), x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(j, i, involute(x.get(i, j)));
    return r;
}

StarMatrix transpose_plain(const StarMatrix& x) {
    StarMatrix r(x.algebra(), x.cols(), x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.set(j, i, x.get(i, j));
    return r;
}

double default_tol(const StarMatrix& a) { return 1e-10 * (1.0 + a.frobenius()); }

bool is_self_adjoint(const StarMatrix& a, double tol) {
    if (a.rows() != a.cols()) throw precondition_error("is_self_adjoint: non-square input");
    // |A - A*| <= tol (1 + |A|); the relative form keeps the predicate
    // scale-invariant
    double eff = (tol < 0.0 ? 1e-10 : tol) * (1.0 + a.frobenius());
    return sub(a, adjoint(a)).frobenius() <= eff;
}

bool is_unitary(const StarMatrix& a, double tol) {
    if (a.rows() != a.cols()) throw precondition_error("is_unitary: non-square input");
    if (tol < 0.0) tol = default_tol(a);
    StarMatrix g = mul(a, adjoint(a));
    return sub(g, StarMatrix::identity(a.algebra(), a.rows())).frobenius() <= tol;
}

StarMatrix direct_sum(const StarMatrix& a, const StarMatrix& b) {
    require_same_algebra(a, b);
    StarMatrix r(a.algebra(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

Scalar inner(const StarMatrix& v, const StarMatrix& w) {
    require_same_algebra(v, w);
    if (v.cols() != 1 || w.cols() != 1 || v.rows() != w.rows())
        throw precondition_error("inner: expects equal-length column vectors");
    Scalar s = zero(v.algebra());
    for (int i = 0; i < v.rows(); ++i)
        s = add(s, mul(involute(v.get(i, 0)), w.get(i, 0)));
    return s;
}

StarMatrix normalize(const StarMatrix& v, double tol) {
    Scalar g = inner(v, v);
    Scalar t = inv_sqrt_selfadjoint(g, tol);
    return scalar_mul_right(v, t);
}

StarMatrix iso_cl101(const StarMatrix& x) {
    const Algebra* a = x.algebra();
    const Algebra* to;
    if (a == alg_cl101_pos())
        to = alg_cl101_neg();
    else if (a == alg_cl101_neg())
        to = alg_cl101_pos();
    else
        throw precondition_error("iso_cl101: matrix is not over Cl_{1,0,1}");
    StarMatrix r(to, x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            r.at(i, j, 0) = x.at(i, j, 0);
            r.at(i, j, 1) = x.at(i, j, 1);
            r.at(i, j, 2) = x.at(i, j, 2);
            r.at(i, j, 3) = -x.at(i, j, 3);
        }
    return r;
}

StarMatrix bracket(const StarMatrix& m, const StarMatrix& k) {
    if (m.algebra() != alg_real() || k.algebra() != alg_real())
        throw precondition_error("bracket: arguments must be real matrices");
    if (m.rows() != k.rows() || m.cols() != k.cols())
        throw precondition_error("bracket: shape mismatch");
    StarMatrix r(alg_rr_swap(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            r.at(i, j, 0) = m.at(i, j, 0);
            r.at(i, j, 1) = k.at(j, i, 0);
        }
    return r;
}

StarMatrix bracket_left(const StarMatrix& a) {
    StarMatrix r(alg_real(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j, 0) = a.at(i, j, 0);
    return r;
}

StarMatrix bracket_right(const StarMatrix& a) {
    StarMatrix r(alg_real(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i, 0) = a.at(i, j, 1);
    return r;
}

// ----------------------------------------------------------- complements

namespace {

// Gram-Schmidt over a division base algebra (real, complex, quaternion).
// `anchors` are already orthonormal; produces `want` more orthonormal
// vectors from the standard basis, picking the largest residual each round.
std::vector<StarMatrix> gs_division(const Algebra* alg, int n,
                                    const std::vector<StarMatrix>& anchors, int want) {
    std::vector<StarMatrix> acc = anchors;
    std::vector<StarMatrix> out;
    std::vector<bool> used(static_cast<size_t>(n), false);

    auto residual = [&](int k) {
        StarMatrix r(alg, n, 1);
        r.set(k, 0, one(alg));
        for (int pass = 0; pass < 2; ++pass)
            for (const StarMatrix& u : acc) r = sub(r, scalar_mul_right(u, inner(u, r)));
        return r;
    };

    for (int picked = 0; picked < want; ++picked) {
        int best = -1;
        double best_norm = -1.0;
        StarMatrix best_r;
        for (int k = 0; k < n; ++k) {
            if (used[static_cast<size_t>(k)]) continue;
            StarMatrix r = residual(k);
            double nrm = r.frobenius();
            if (nrm > best_norm + 1e-14) {
                best_norm = nrm;
                best = k;
                best_r = r;
            }
        }
        if (best < 0 || best_norm < 1e-8)
            throw precondition_error("complement_basis: failed to complete an orthonormal basis");
        used[static_cast<size_t>(best)] = true;
        StarMatrix u = scale(best_r, 1.0 / best_norm);
        acc.push_back(u);
        out.push_back(u);
    }
    return out;
}

}  // namespace

StarMatrix complement_basis(const std::vector<StarMatrix>& vecs, int n,
                            const Algebra* alg, double tol) {
    const int m = static_cast<int>(vecs.size());
    if (n < m) throw precondition_error("complement_basis: more vectors than dimensions");
    const Algebra* base = alg->has_delta ? alg->base : alg;

    // base parts of the given vectors, as base-algebra columns
    std::vector<StarMatrix> wb;
    for (const StarMatrix& w : vecs) {
        if (w.algebra() != alg || w.rows() != n || w.cols() != 1)
            throw precondition_error("complement_basis: bad vector shape");
        StarMatrix b(base, n, 1);
        for (int i = 0; i < n; ++i) {
            Scalar e = w.get(i, 0);
            Scalar eb = alg->has_delta ? base_part(e) : e;
            b.set(i, 0, eb);
        }
        wb.push_back(b);
    }

    // the proofs need base parts that are themselves orthonormal (for R(+)R:
    // per component); the delta correction below needs this
    double check_tol = (tol < 0.0) ? 1e-6 : tol;
    const bool rr_base = (base == alg_rr_id() || base == alg_rr_swap());
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Scalar g = inner(wb[static_cast<size_t>(i)], wb[static_cast<size_t>(j)]);
            Scalar want = (i == j) ? one(base) : zero(base);
            Scalar diff = sub(g, want);
            if (diff.abs_max() > check_tol)
                throw precondition_error(
                    "complement_basis: base parts of the given vectors fail the "
                    "orthonormal-displacement condition");
        }

    std::vector<StarMatrix> pbase;
    if (rr_base) {
        // two independent real complements, paired index-wise
        std::vector<StarMatrix> left, right;
        for (const StarMatrix& b : wb) {
            StarMatrix l(alg_real(), n, 1), r(alg_real(), n, 1);
            for (int i = 0; i < n; ++i) {
                l.at(i, 0, 0) = b.at(i, 0, 0);
                r.at(i, 0, 0) = b.at(i, 0, 1);
            }
            left.push_back(l);
            right.push_back(r);
        }
        auto pl = gs_division(alg_real(), n, left, n - m);
        auto pr = gs_division(alg_real(), n, right, n - m);
        for (int k = 0; k < n - m; ++k) {
            StarMatrix p(base, n, 1);
            for (int i = 0; i < n; ++i) {
                p.at(i, 0, 0) = pl[static_cast<size_t>(k)].at(i, 0, 0);
                p.at(i, 0, 1) = pr[static_cast<size_t>(k)].at(i, 0, 0);
            }
            pbase.push_back(p);
        }
    } else {
        pbase = gs_division(base, n, wb, n - m);
    }

    // embed into the full algebra and correct against the delta parts;
    // delta^2 = 0 makes w* x exactly zero afterwards
    StarMatrix x(alg, n, n - m);
    for (int k = 0; k < n - m; ++k) {
        StarMatrix p(alg, n, 1);
        for (int i = 0; i < n; ++i) {
            Scalar e = alg->has_delta
                           ? join_delta(alg, pbase[static_cast<size_t>(k)].get(i, 0), zero(base))
                           : pbase[static_cast<size_t>(k)].get(i, 0);
            p.set(i, 0, e);
        }
        if (alg->has_delta)
            for (const StarMatrix& w : vecs) p = sub(p, scalar_mul_right(w, inner(w, p)));
        x.set_col(k, p);
    }
    return x;
}

Restriction restrict_to_complement(const StarMatrix& h, const std::vector<StarMatrix>& vecs,
                                   double tol) {
    if (h.rows() != h.cols()) throw precondition_error("restrict_to_complement: non-square H");
    StarMatrix x = complement_basis(vecs, h.rows(), h.algebra(), tol);
    StarMatrix hr = mul(adjoint(x), mul(h, x));
    return {x, hr};
}

}  // namespace starlin
