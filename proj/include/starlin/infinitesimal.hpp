#pragma once

#include <array>

#include "starlin/base_spectral.hpp"

namespace starlin {

// One diagonal entry of a Cl_{1,0,1} *_1 spectral decomposition: either a
// dual number st + nst*delta or a pair (x, y) of reals.
struct SvdEigenvalue {
    bool is_dual = false;
    double st = 0.0, nst = 0.0;  // dual case
    double x = 0.0, y = 0.0;     // pair case
};

// Canonical spectrum triple (C, L, R) of a self-adjoint SVD-algebra matrix.
struct SvdAlgSpectrum {
    std::vector<std::array<double, 2>> C;  // (st, nst) with nst > 0
    std::vector<double> L, R;              // |L| = |R|
};

// Unitary diagonalisation over the SVD algebra Cl_{1,0,1} *_1, by induction:
// unpack to (D, id), solve, then branch on dual-vs-real eigenvalue cases.
EigenDecomp spectral_svdalg(const StarMatrix& h, double tol = -1.0,
                            std::vector<SvdEigenvalue>* eigenvalues = nullptr);

SvdAlgSpectrum spectrum_svdalg(const StarMatrix& h, double tol = -1.0);

// Takagi algebra Cl_{0,1,1} *_1: standard-part Hermitian solve, first-order
// block perturbation, then per-cluster Takagi of the delta blocks.
EigenDecomp spectral_takagi_alg(const StarMatrix& h, double tol = -1.0);

// Skew-Takagi algebra Cl_{0,1,1} *_{-1}: D is a direct sum of blocks
// [[l, -m delta], [m delta, l]] and (l), sorted by (l desc, m desc).
EigenDecomp spectral_skewtakagi_alg(const StarMatrix& h, double tol = -1.0);

// H (x) D with *_{-1}: per-cluster quaternion skew canonical form; D has
// diagonal entries l + m*i*delta, sorted by (l desc, m desc).
EigenDecomp spectral_quatdual(const StarMatrix& h, double tol = -1.0);

// Cl_{1,0,1} *_{-1} via the iso to *_1.
EigenDecomp spectral_cl101_neg(const StarMatrix& h, double tol = -1.0,
                               std::vector<SvdEigenvalue>* eigenvalues = nullptr);

// Takagi of a complex-symmetric S by unpack-and-unwind induction:
// S = U diag(d) U^T with U complex unitary and d >= 0 descending.
struct TakagiCoreResult {
    StarMatrix u;
    std::vector<double> d;
};
TakagiCoreResult takagi_core(const StarMatrix& s, double tol = -1.0);

// Skew-Takagi of a complex skew-symmetric S: S = U D U^T with D the real
// direct sum of [[0,-mu],[mu,0]] blocks (mu descending) and zeros.
struct SkewTakagiCoreResult {
    StarMatrix u;
    StarMatrix d;  // real
    std::vector<double> mus;
};
SkewTakagiCoreResult skew_takagi_core(const StarMatrix& s, double tol = -1.0);

namespace lemmas {

// Combines one-sided eigenvectors u_i (left-viable) and u_j (right-viable)
// into a unit eigenvector w = u_i(1,0)/|a_i| + u_j(0,1)/|b_j|; the caller
// guarantees lambda_i != lambda_j.
StarMatrix promote_semi_eigenpair(const StarMatrix& u_left, const StarMatrix& u_right);

// w = v (v*v)^{-1/2}; requires an invertible (non-infinitesimal) self-inner.
StarMatrix normalize_dual_eigenvector(const StarMatrix& v);

// Near-identity correction data: C_ij = B_ij / (lam_i - lam_j) across
// clusters of lam (descending, chained at cluster_tol), zero within.
// I + C*delta is exactly unitary in the delta algebra since delta^2 = 0.
StarMatrix cluster_correction(const StarMatrix& b, const std::vector<double>& lam,
                              double cluster_tol);

// Cluster boundaries of a descending eigenvalue list: [start, end) ranges.
std::vector<std::pair<int, int>> cluster_ranges(const std::vector<double>& lam,
                                                double cluster_tol);

}  // namespace lemmas

}  // namespace starlin
