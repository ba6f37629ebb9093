#pragma once

#include <vector>

#include "starlin/algebra.hpp"

namespace starlin {

// Dense row-major matrix over one scalar algebra.  Values are immutable in
// spirit: operations return fresh matrices.
class StarMatrix {
  public:
    StarMatrix() = default;
    StarMatrix(const Algebra* alg, int rows, int cols)
        : alg_(alg), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols * alg->dim, 0.0) {}

    static StarMatrix identity(const Algebra* alg, int n);

    const Algebra* algebra() const { return alg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double at(int i, int j, int k) const { return a_[idx(i, j, k)]; }
    double& at(int i, int j, int k) { return a_[idx(i, j, k)]; }

    Scalar get(int i, int j) const;
    void set(int i, int j, const Scalar& v);

    StarMatrix block(int r0, int c0, int r, int c) const;
    void set_block(int r0, int c0, const StarMatrix& b);
    StarMatrix col(int j) const { return block(0, j, rows_, 1); }
    void set_col(int j, const StarMatrix& v) { set_block(0, j, v); }

    double frobenius() const;  // sqrt of sum of squared components

  private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * cols_ + j) * alg_->dim + static_cast<size_t>(k);
    }

    const Algebra* alg_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

StarMatrix add(const StarMatrix& x, const StarMatrix& y);
StarMatrix sub(const StarMatrix& x, const StarMatrix& y);
StarMatrix neg(const StarMatrix& x);
StarMatrix scale(const StarMatrix& x, double t);
StarMatrix mul(const StarMatrix& x, const StarMatrix& y);
StarMatrix scalar_mul_left(const Scalar& s, const StarMatrix& x);   // s * X
StarMatrix scalar_mul_right(const StarMatrix& x, const Scalar& s);  // X * s

// (A*)_{ij} = (A_{ji})^*
StarMatrix adjoint(const StarMatrix& x);

// transpose without the entry involution
StarMatrix transpose_plain(const StarMatrix& x);

// Default predicate tolerance: 1e-10 * (1 + |A|_F).
double default_tol(const StarMatrix& a);

// |A - A*|_F <= tol * (1 + |A|_F), default tol 1e-10
bool is_self_adjoint(const StarMatrix& a, double tol = -1.0);
// |A A* - I|_F <= tol, default 1e-10 * (1 + |A|_F)
bool is_unitary(const StarMatrix& a, double tol = -1.0);

StarMatrix direct_sum(const StarMatrix& a, const StarMatrix& b);

// v* w for column vectors; normalize returns v (v*v)^{-1/2}.
Scalar inner(const StarMatrix& v, const StarMatrix& w);
StarMatrix normalize(const StarMatrix& v, double tol = 1e-9);

// Entrywise iso between the two Cl_{1,0,1} involutions (works both ways).
StarMatrix iso_cl101(const StarMatrix& x);

// --- bracket matrices over (R(+)R, *_{-1}) -------------------------------

// [M, K] = (1,0) M + (0,1) K^T; arguments are matrices over alg_real().
StarMatrix bracket(const StarMatrix& m, const StarMatrix& k);
StarMatrix bracket_left(const StarMatrix& a);   // the M of [M, K]
StarMatrix bracket_right(const StarMatrix& a);  // the K of [M, K]

// --- orthonormal complements ----------------------------------------------

// Orthonormal basis of the orthogonal complement of the span of the given
// unit, pairwise-orthogonal columns.  The basis is built by Gram-Schmidt
// over the base subalgebra (componentwise for R(+)R, with index-wise pairing
// of the two complements) and then corrected against the delta parts of the
// given vectors; delta^2 = 0 makes the correction exact.
StarMatrix complement_basis(const std::vector<StarMatrix>& vecs, int n,
                            const Algebra* alg, double tol = -1.0);

struct Restriction {
    StarMatrix basis;      // n x (n-m), columns span the complement
    StarMatrix restricted; // (n-m) x (n-m), X* H X
};

Restriction restrict_to_complement(const StarMatrix& h,
                                   const std::vector<StarMatrix>& vecs,
                                   double tol = -1.0);

}  // namespace starlin
