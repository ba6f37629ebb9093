#pragma once

#include <random>

#include "starlin/algebra.hpp"
#include "starlin/base_spectral.hpp"
#include "starlin/convert.hpp"
#include "starlin/matrix.hpp"
#include "starlin/random.hpp"

namespace testutil {

using namespace starlin;

inline Scalar random_scalar(const Algebra* a, Rng& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Scalar s(a);
    for (int k = 0; k < a->dim; ++k) s[k] = dist(rng);
    return s;
}

inline double sdist(const Scalar& x, const Scalar& y) { return sub(x, y).abs_max(); }

inline double mdist(const StarMatrix& x, const StarMatrix& y) { return sub(x, y).frobenius(); }

inline Scalar sc(const Algebra* a, std::initializer_list<double> comps) {
    Scalar s(a);
    int k = 0;
    for (double v : comps) s[k++] = v;
    return s;
}

// 1x1 real matrix shortcut and small builders
inline StarMatrix real_mat(int rows, int cols, std::initializer_list<double> vals) {
    StarMatrix m(alg_real(), rows, cols);
    int idx = 0;
    for (double v : vals) {
        m.at(idx / cols, idx % cols, 0) = v;
        ++idx;
    }
    return m;
}

inline StarMatrix complex_mat(int rows, int cols, std::initializer_list<double> re,
                              std::initializer_list<double> im) {
    return complex_from(real_mat(rows, cols, re), real_mat(rows, cols, im));
}

// (M, M^T) delta over the SVD algebra
inline StarMatrix svd_infinitesimal(const StarMatrix& m) {
    StarMatrix h(alg_cl101_pos(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            h.at(i, j, 2) = m.at(i, j, 0);
            h.at(i, j, 3) = m.at(j, i, 0);
        }
    return h;
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

// singular values via the Gram matrix and the real Jacobi solver only;
// independent of every decomposition path it is used to check
inline std::vector<double> gram_oracle(const StarMatrix& m) {
    StarMatrix g = mul(adjoint(m), m);
    StarMatrix greal;
    size_t step = 1;
    if (m.algebra() == alg_real())
        greal = g;
    else if (m.algebra() == alg_complex()) {
        // real embedding of the Hermitian Gram matrix doubles each eigenvalue
        int n = g.rows();
        greal = StarMatrix(alg_real(), 2 * n, 2 * n);
        greal.set_block(0, 0, re_part(g));
        greal.set_block(0, n, neg(im_part(g)));
        greal.set_block(n, 0, im_part(g));
        greal.set_block(n, n, re_part(g));
        step = 2;
    } else
        throw precondition_error("gram_oracle: unsupported algebra");
    JacobiResult jr = jacobi_symmetric(greal);
    std::vector<double> out;
    for (size_t k = 0; k < jr.values.size(); k += step)
        out.push_back(std::sqrt(std::max(0.0, jr.values[k])));
    return out;
}

std::vector<double> gram_singular_values(const StarMatrix& m);

}  // namespace testutil
