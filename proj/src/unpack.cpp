#include "starlin/unpack.hpp"

#include "starlin/convert.hpp"

namespace starlin {

namespace {

// ---- C -> R ---------------------------------------------------------------

StarMatrix unpack_c(const StarMatrix& x) {
    const int n = x.rows(), m = x.cols();
    StarMatrix a = re_part(x), b = im_part(x);
    StarMatrix r(alg_real(), 2 * n, 2 * m);
    r.set_block(0, 0, a);
    r.set_block(0, m, neg(b));
    r.set_block(n, 0, b);
    r.set_block(n, m, a);
    return r;
}

StarMatrix unwind_c(const StarMatrix& v) {
    const int n = v.rows();
    StarMatrix r(alg_real(), 2 * n, 1);
    r.set_block(0, 0, re_part(v));
    r.set_block(n, 0, im_part(v));
    return r;
}

StarMatrix rewind_c(const StarMatrix& v) {
    const int n = v.rows() / 2;
    return complex_from(v.block(0, 0, n, 1), v.block(n, 0, n, 1));
}

// ---- H -> C (x = al + be j with al = a+bi, be = c+di) ----------------------

StarMatrix unpack_h(const StarMatrix& x) {
    const int n = x.rows(), m = x.cols();
    StarMatrix al = complex_from(quat_component(x, 0), quat_component(x, 1));
    StarMatrix be = complex_from(quat_component(x, 2), quat_component(x, 3));
    StarMatrix r(alg_complex(), 2 * n, 2 * m);
    r.set_block(0, 0, al);
    r.set_block(0, m, neg(be));
    r.set_block(n, 0, mat_conj(be));
    r.set_block(n, m, mat_conj(al));
    return r;
}

StarMatrix unwind_h(const StarMatrix& v) {
    const int n = v.rows();
    StarMatrix p = complex_from(quat_component(v, 0), quat_component(v, 1));
    StarMatrix qc = complex_from(quat_component(v, 2), neg(quat_component(v, 3)));
    StarMatrix r(alg_complex(), 2 * n, 1);
    r.set_block(0, 0, p);
    r.set_block(n, 0, qc);
    return r;
}

StarMatrix rewind_h(const StarMatrix& v) {
    const int n = v.rows() / 2;
    StarMatrix p = v.block(0, 0, n, 1), qc = v.block(n, 0, n, 1);
    return quaternion_from(re_part(p), im_part(p), re_part(qc), neg(im_part(qc)));
}

// ---- H -> R (composite) ----------------------------------------------------

StarMatrix unpack_hr(const StarMatrix& x) { return unpack_c(unpack_h(x)); }
StarMatrix unwind_hr(const StarMatrix& v) { return unwind_c(unwind_h(v)); }
StarMatrix rewind_hr(const StarMatrix& v) { return rewind_h(rewind_c(v)); }

// ---- Cl_{0,1,1} -> D (both involutions share the algebra map) --------------
// w + z delta with w = A + Bi, z = C + Di maps to
//   [[A + C eps, -B + D eps], [B + D eps, A - C eps]]

StarMatrix unpack_cl011(const StarMatrix& x) {
    const int n = x.rows(), m = x.cols();
    StarMatrix w = mat_base_part(x), z = mat_delta_part(x);
    StarMatrix a = re_part(w), b = im_part(w), c = re_part(z), d = im_part(z);
    StarMatrix st(alg_real(), 2 * n, 2 * m), ns(alg_real(), 2 * n, 2 * m);
    st.set_block(0, 0, a);
    st.set_block(0, m, neg(b));
    st.set_block(n, 0, b);
    st.set_block(n, m, a);
    ns.set_block(0, 0, c);
    ns.set_block(0, m, d);
    ns.set_block(n, 0, d);
    ns.set_block(n, m, neg(c));
    return dual_from(st, ns);
}

StarMatrix unwind_cl011(const StarMatrix& v) {
    const int n = v.rows();
    StarMatrix p = mat_base_part(v), q = mat_delta_part(v);
    StarMatrix st(alg_real(), 2 * n, 1), ns(alg_real(), 2 * n, 1);
    st.set_block(0, 0, re_part(p));
    st.set_block(n, 0, im_part(p));
    ns.set_block(0, 0, re_part(q));
    ns.set_block(n, 0, im_part(q));
    return dual_from(st, ns);
}

StarMatrix rewind_cl011(const StarMatrix& v, const Algebra* alg) {
    const int n = v.rows() / 2;
    StarMatrix st = st_part(v), ns = nst_part(v);
    StarMatrix p = complex_from(st.block(0, 0, n, 1), st.block(n, 0, n, 1));
    StarMatrix q = complex_from(ns.block(0, 0, n, 1), ns.block(n, 0, n, 1));
    return mat_join_delta(alg, p, q);
}

StarMatrix rewind_cl011_pos(const StarMatrix& v) { return rewind_cl011(v, alg_cl011_pos()); }
StarMatrix rewind_cl011_neg(const StarMatrix& v) { return rewind_cl011(v, alg_cl011_neg()); }

// ---- Cl_{1,0,1} *_1 -> D ---------------------------------------------------
// (A,B) + (C,D) delta maps to [[A, C eps], [D eps, B]]

StarMatrix unpack_cl101(const StarMatrix& x) {
    const int n = x.rows(), m = x.cols();
    StarMatrix w = mat_base_part(x), z = mat_delta_part(x);
    StarMatrix a = rr_left(w), b = rr_right(w), c = rr_left(z), d = rr_right(z);
    StarMatrix st(alg_real(), 2 * n, 2 * m), ns(alg_real(), 2 * n, 2 * m);
    st.set_block(0, 0, a);
    st.set_block(n, m, b);
    ns.set_block(0, m, c);
    ns.set_block(n, 0, d);
    return dual_from(st, ns);
}

StarMatrix unwind_cl101(const StarMatrix& v) {
    const int n = v.rows();
    StarMatrix w = mat_base_part(v), z = mat_delta_part(v);
    StarMatrix st(alg_real(), 2 * n, 1), ns(alg_real(), 2 * n, 1);
    st.set_block(0, 0, rr_left(w));
    st.set_block(n, 0, rr_right(w));
    ns.set_block(0, 0, rr_left(z));
    ns.set_block(n, 0, rr_right(z));
    return dual_from(st, ns);
}

StarMatrix rewind_cl101(const StarMatrix& v) {
    const int n = v.rows() / 2;
    StarMatrix st = st_part(v), ns = nst_part(v);
    StarMatrix w = rr_from(alg_rr_id(), st.block(0, 0, n, 1), st.block(n, 0, n, 1));
    StarMatrix z = rr_from(alg_rr_id(), ns.block(0, 0, n, 1), ns.block(n, 0, n, 1));
    return mat_join_delta(alg_cl101_pos(), w, z);
}

// ---- H (x) D -> D (level-wise H -> R) --------------------------------------

StarMatrix unpack_qd(const StarMatrix& x) {
    StarMatrix q0 = mat_base_part(x), q1 = mat_delta_part(x);
    return dual_from(unpack_hr(q0), unpack_hr(q1));
}

StarMatrix unwind_qd(const StarMatrix& v) {
    StarMatrix q0 = mat_base_part(v), q1 = mat_delta_part(v);
    return dual_from(unwind_hr(q0), unwind_hr(q1));
}

StarMatrix rewind_qd(const StarMatrix& v) {
    return mat_join_delta(alg_quatdual(), rewind_hr(st_part(v)), rewind_hr(nst_part(v)));
}

// ---- bad C -> R fixture ----------------------------------------------------
// unwind(u + vi) = (u + v, u); unpack = L R(x) L^{-1} with L = [[1,1],[1,0]],
// which keeps the pair multiplicative while breaking norm transport.

StarMatrix unpack_bad(const StarMatrix& x) {
    const int n = x.rows(), m = x.cols();
    StarMatrix a = re_part(x), b = im_part(x);
    StarMatrix r(alg_real(), 2 * n, 2 * m);
    r.set_block(0, 0, sub(a, b));         // A - B
    r.set_block(0, m, scale(b, 2.0));     // 2B
    r.set_block(n, 0, neg(b));            // -B
    r.set_block(n, m, add(a, b));         // A + B
    return r;
}

StarMatrix unwind_bad(const StarMatrix& v) {
    const int n = v.rows();
    StarMatrix r(alg_real(), 2 * n, 1);
    r.set_block(0, 0, add(re_part(v), im_part(v)));
    r.set_block(n, 0, re_part(v));
    return r;
}

StarMatrix rewind_bad(const StarMatrix& v) {
    const int n = v.rows() / 2;
    StarMatrix top = v.block(0, 0, n, 1), bot = v.block(n, 0, n, 1);
    return complex_from(bot, sub(top, bot));
}

}  // namespace

StarMatrix target_adjoint(const UnpackPair& p, const StarMatrix& x) {
    StarMatrix a = adjoint(x);
    if (p.eps_negated_adjoint) {
        if (a.algebra() != alg_dual())
            throw precondition_error("target_adjoint: eps negation expects a dual matrix");
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j, 1) = -a.at(i, j, 1);
    }
    return a;
}

const UnpackPair& pair_complex() {
    static UnpackPair p{"complex",  alg_complex(), alg_real(), 2, false, true,
                        &unpack_c,  &unwind_c,     &rewind_c};
    return p;
}

const UnpackPair& pair_quaternion() {
    static UnpackPair p{"quaternion", alg_quaternion(), alg_real(), 4, false, true,
                        &unpack_hr,   &unwind_hr,       &rewind_hr};
    return p;
}

const UnpackPair& pair_quaternion_skew() {
    static UnpackPair p{"quaternion_skew", alg_quaternion(), alg_complex(), 2, false, true,
                        &unpack_h,         &unwind_h,        &rewind_h};
    return p;
}

const UnpackPair& pair_takagi() {
    static UnpackPair p{"takagi",      alg_cl011_pos(), alg_dual(), 2, false, false,
                        &unpack_cl011, &unwind_cl011,   &rewind_cl011_pos};
    return p;
}

const UnpackPair& pair_skewtakagi() {
    static UnpackPair p{"skewtakagi",  alg_cl011_neg(), alg_dual(), 2, true, false,
                        &unpack_cl011, &unwind_cl011,   &rewind_cl011_neg};
    return p;
}

const UnpackPair& pair_svdalg() {
    static UnpackPair p{"svdalg",      alg_cl101_pos(), alg_dual(), 2, false, false,
                        &unpack_cl101, &unwind_cl101,   &rewind_cl101};
    return p;
}

const UnpackPair& pair_quatdual() {
    static UnpackPair p{"quatdual", alg_quatdual(), alg_dual(), 4, true, false,
                        &unpack_qd, &unwind_qd,     &rewind_qd};
    return p;
}

const UnpackPair& pair_bad_unwind() {
    static UnpackPair p{"bad_unwind", alg_complex(), alg_real(), 2, false, false,
                        &unpack_bad,  &unwind_bad,   &rewind_bad};
    return p;
}

const std::vector<const UnpackPair*>& shipped_pairs() {
    static std::vector<const UnpackPair*> ps{
        &pair_complex(), &pair_quaternion(), &pair_quaternion_skew(), &pair_takagi(),
        &pair_skewtakagi(), &pair_svdalg(), &pair_quatdual()};
    return ps;
}

}  // namespace starlin
