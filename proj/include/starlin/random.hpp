#pragma once

#include <random>

#include "starlin/matrix.hpp"

namespace starlin {

using Rng = std::mt19937_64;

// entries with components uniform in [-1, 1]
StarMatrix random_matrix(const Algebra* a, int rows, int cols, Rng& rng);

// (X + X*)/2 of a random matrix
StarMatrix random_self_adjoint(const Algebra* a, int n, Rng& rng);

// Haar-ish unitary built per algebra: Gram-Schmidt over division algebras,
// paired orthogonals for R(+)R *_1, [P, P^{-1}] for R(+)R *_{-1}, and
// U0 (I + K delta) with the appropriate K symmetry for the delta algebras.
StarMatrix random_unitary(const Algebra* a, int n, Rng& rng);

// unimodular integer matrix (det +-1) from random shears; exact in doubles
StarMatrix random_unimodular(int n, Rng& rng);

}  // namespace starlin
