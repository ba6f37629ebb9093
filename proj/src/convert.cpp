#include "starlin/convert.hpp"

namespace starlin {

namespace {

StarMatrix plane(const StarMatrix& x, int k) {
    StarMatrix r(alg_real(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.at(i, j, 0) = x.at(i, j, k);
    return r;
}

void set_plane(StarMatrix& x, int k, const StarMatrix& p) {
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) x.at(i, j, k) = p.at(i, j, 0);
}

}  // namespace

StarMatrix complex_from(const StarMatrix& re, const StarMatrix& im) {
    StarMatrix r(alg_complex(), re.rows(), re.cols());
    set_plane(r, 0, re);
    set_plane(r, 1, im);
    return r;
}

StarMatrix re_part(const StarMatrix& c) { return plane(c, 0); }
StarMatrix im_part(const StarMatrix& c) { return plane(c, 1); }

StarMatrix mat_conj(const StarMatrix& c) {
    StarMatrix r = c;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j, 1) = -r.at(i, j, 1);
    return r;
}

StarMatrix dual_from(const StarMatrix& st, const StarMatrix& nst) {
    StarMatrix r(alg_dual(), st.rows(), st.cols());
    set_plane(r, 0, st);
    set_plane(r, 1, nst);
    return r;
}

StarMatrix st_part(const StarMatrix& d) { return plane(d, 0); }
StarMatrix nst_part(const StarMatrix& d) { return plane(d, 1); }

StarMatrix quaternion_from(const StarMatrix& a, const StarMatrix& b, const StarMatrix& c,
                           const StarMatrix& d) {
    StarMatrix r(alg_quaternion(), a.rows(), a.cols());
    set_plane(r, 0, a);
    set_plane(r, 1, b);
    set_plane(r, 2, c);
    set_plane(r, 3, d);
    return r;
}

StarMatrix quat_component(const StarMatrix& q, int k) { return plane(q, k); }

StarMatrix rr_from(const Algebra* rr, const StarMatrix& left, const StarMatrix& right) {
    StarMatrix r(rr, left.rows(), left.cols());
    set_plane(r, 0, left);
    set_plane(r, 1, right);
    return r;
}

StarMatrix rr_left(const StarMatrix& x) { return plane(x, 0); }
StarMatrix rr_right(const StarMatrix& x) { return plane(x, 1); }

StarMatrix mat_base_part(const StarMatrix& x) {
    const Algebra* a = x.algebra();
    StarMatrix r(a->base, x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < a->base_dim; ++k) r.at(i, j, k) = x.at(i, j, k);
    return r;
}

StarMatrix mat_delta_part(const StarMatrix& x) {
    const Algebra* a = x.algebra();
    StarMatrix r(a->base, x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < a->base_dim; ++k) r.at(i, j, k) = x.at(i, j, a->base_dim + k);
    return r;
}

StarMatrix mat_join_delta(const Algebra* alg, const StarMatrix& w, const StarMatrix& z) {
    StarMatrix r(alg, w.rows(), w.cols());
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j)
            for (int k = 0; k < alg->base_dim; ++k) {
                r.at(i, j, k) = w.at(i, j, k);
                r.at(i, j, alg->base_dim + k) = z.at(i, j, k);
            }
    return r;
}

StarMatrix embed_base(const Algebra* alg, const StarMatrix& w) {
    StarMatrix z(alg->base, w.rows(), w.cols());
    return mat_join_delta(alg, w, z);
}

StarMatrix real_diag(const std::vector<double>& vals) {
    int n = static_cast<int>(vals.size());
    StarMatrix r(alg_real(), n, n);
    for (int i = 0; i < n; ++i) r.at(i, i, 0) = vals[static_cast<size_t>(i)];
    return r;
}

}  // namespace starlin
