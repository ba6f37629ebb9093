#pragma once

#include "starlin/infinitesimal.hpp"
#include "starlin/rational.hpp"

namespace starlin {

// Each classic decomposition below is obtained from a single invocation of
// the matching self-adjoint diagonalisation, plus factor extraction.

struct SvdResult {
    StarMatrix u;               // m x m real orthogonal
    StarMatrix v;               // n x n real orthogonal
    std::vector<double> sigma;  // min(m, n) values, descending, >= 0
    double recon_residual = 0.0;
    double unitary_residual = 0.0;  // max of the U and V defects
};

SvdResult svd(const StarMatrix& m, double tol = -1.0);
StarMatrix sigma_matrix(const SvdResult& r, int rows, int cols);  // rectangular diag

struct TakagiResult {
    StarMatrix u;           // complex unitary
    std::vector<double> d;  // real, >= 0, descending
    double recon_residual = 0.0;
    double unitary_residual = 0.0;
};

TakagiResult takagi(const StarMatrix& s, double tol = -1.0);

struct SkewTakagiResult {
    StarMatrix u;            // complex unitary
    StarMatrix d;            // real blocks [[0,-mu],[mu,0]] then zeros
    std::vector<double> mus; // descending
    double recon_residual = 0.0;
    double unitary_residual = 0.0;
};

SkewTakagiResult skew_takagi(const StarMatrix& s, double tol = -1.0);

// (H, K) = (U, V)(D, E)(U, V)* over (R(+)R, *_1): two independent real solves.
struct PairDiagResult {
    StarMatrix u;  // over rr_id
    StarMatrix d;  // over rr_id, diagonal
    double recon_residual = 0.0;
    double unitary_residual = 0.0;
};

PairDiagResult pair_diag(const StarMatrix& h, const StarMatrix& k, double tol = -1.0);

// Re-export keeping the five classics in one namespace.
EigenDecomp quaternion_skew_spectral(const StarMatrix& m, double tol = -1.0);

// --- exact Jordan form ------------------------------------------------------

struct JordanBlockInfo {
    Rational eigenvalue;
    int size;
};

struct JordanResult {
    RationalMatrix p;      // invertible
    RationalMatrix j;      // Jordan matrix, blocks by (eigenvalue asc, size desc)
    RationalMatrix p_inv;
    std::vector<JordanBlockInfo> blocks;
};

// Exact rational Jordan decomposition: P J P^{-1} = M.  Requires all
// eigenvalues rational; otherwise throws precondition_error naming the
// irreducible factor.
JordanResult jordan(const RationalMatrix& m);

// [M,M] = [P,P^{-1}][J,J][P^{-1},P] over (R(+)R, *_{-1}), verified exactly.
bool jordan_bracket_identity_holds(const RationalMatrix& m, const JordanResult& jr);

}  // namespace starlin
