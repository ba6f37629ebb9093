#pragma once

#include "starlin/matrix.hpp"

namespace starlin {

// U D U* = H with U unitary over the matrix's algebra and D in the
// algebra's canonical diagonal (or block-diagonal) form.
struct EigenDecomp {
    StarMatrix U, D;
    double recon_residual = 0.0;
    double unitary_residual = 0.0;
    std::vector<double> mus;  // block magnitudes for the skew canonical forms
};

// Counts top-level invocations of the spectral routines; nested internal
// calls are not counted.  Backs the one-call facade tests.
long spectral_call_count();
void reset_spectral_call_count();

namespace detail {
struct SpectralCallGuard {
    SpectralCallGuard();
    ~SpectralCallGuard();
};
}  // namespace detail

void fill_residuals(EigenDecomp& d, const StarMatrix& h);

// Cyclic Jacobi eigensolver for real symmetric matrices.  Eigenvalues come
// back descending; each eigenvector's first component of magnitude > 1e-8
// is made positive.
struct JacobiResult {
    std::vector<double> values;
    StarMatrix vectors;  // real, columns are eigenvectors
};
JacobiResult jacobi_symmetric(const StarMatrix& s);

// All tolerances below are relative: the effective bound is
// tol * (1 + |input|_F), with tol defaulting to 1e-8.

EigenDecomp eig_real_symmetric(const StarMatrix& s, double tol = -1.0);
EigenDecomp eig_complex_hermitian(const StarMatrix& h, double tol = -1.0);
EigenDecomp eig_quaternion_hermitian(const StarMatrix& h, double tol = -1.0);

// D = blocks [[0,-mu],[mu,0]] (mu descending) then zeros; U real orthogonal.
EigenDecomp canon_real_skew(const StarMatrix& s, double tol = -1.0);

// D = diag(mu_1 i, ..., mu_r i, 0, ..., 0) over the quaternions, mu
// descending.  A real rotation-block form does not exist for odd
// multiplicities (already the 1x1 matrix [j] has none), so the canonical
// diagonal uses the quaternion unit i.
EigenDecomp canon_quaternion_skew(const StarMatrix& m, double tol = -1.0);

// Spectral theorem over (D, id): H = U D U^T with U dual-orthogonal and D
// dual diagonal, via the standard-part solve plus the first-order block
// perturbation and a per-cluster eps-block diagonalisation.
EigenDecomp eig_dual_selfadjoint(const StarMatrix& h, double tol = -1.0);

}  // namespace starlin
