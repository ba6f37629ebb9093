#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "starlin/matrix.hpp"

namespace starlin {

// Canonical description of a self-adjoint matrix's unitary-similarity class.
// Payload shape depends on the algebra; unused members stay empty.
struct SpectrumClass {
    std::string algebra;

    std::vector<double> eigs;        // real / complex / quaternion eigenvalues
    std::vector<double> eigs_right;  // second component for (R(+)R, *_1)
    std::vector<std::array<double, 2>> duals;  // (st, nst): dual solver, Takagi
                                               // algebra (lam, d), and C of the
                                               // SVD-algebra triple
    std::vector<double> L, R;                  // SVD algebra
    std::vector<std::array<double, 2>> blocks; // (lam, mu) blocks, skew forms
    std::vector<double> singles;               // bare lambdas next to blocks
    std::vector<std::pair<std::string, int>> jordan_blocks;  // (eigenvalue, size)
};

SpectrumClass spectrum_of(const StarMatrix& h, double tol = -1.0);

// multiset union per component (algebra tags must match)
SpectrumClass spectrum_add(const SpectrumClass& a, const SpectrumClass& b);

// equality after quantising every numeric component to the given grid
bool spectrum_equal(const SpectrumClass& a, const SpectrumClass& b, double grid = 1e-7);

// largest componentwise deviation between two same-shape classes (inf when
// the shapes differ); the probe's "worst residual"
double spectrum_distance(const SpectrumClass& a, const SpectrumClass& b);

std::string to_string(const SpectrumClass& s);

// --- empirical probe of the spectral conjecture -----------------------------

struct ProbeReport {
    std::string algebra;
    int dim = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int additivity_checked = 0, additivity_failed = 0;
    int conjugation_checked = 0, conjugation_failed = 0;
    int cancellation_checked = 0, cancellation_failed = 0;
    double worst_distance = 0.0;  // over passing comparisons
    std::vector<std::uint64_t> violation_trials;
};

// Checks, per trial: direct-sum additivity of canonical classes, conjugation
// invariance, and cancellation (equal sums with a common summand imply equal
// parts).  Report-only; proves nothing.
ProbeReport probe_conjecture(const std::string& algebra, int dim, int trials,
                             std::uint64_t seed);

std::string to_string(const ProbeReport& r);

}  // namespace starlin
