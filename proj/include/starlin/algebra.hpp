#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "starlin/errors.hpp"

namespace starlin {

// Largest component count among the supported algebras (H (x) D has 8).
inline constexpr int kMaxComponents = 8;

using Components = std::array<double, kMaxComponents>;

// A linear map on scalar components, stored densely.  All involutions and
// delta-commutation maps in scope are signed permutations, but the dense
// form also admits arbitrary user-supplied phi candidates for adjoin_delta.
struct LinearMap {
    int dim = 0;
    std::array<double, kMaxComponents * kMaxComponents> m{};  // row-major

    static LinearMap identity(int dim);
    static LinearMap signed_perm(int dim, const std::vector<int>& src,
                                 const std::vector<double>& sign);

    Components apply(const Components& x) const;
    LinearMap compose(const LinearMap& other) const;  // this after other
    bool equals(const LinearMap& other, double tol) const;
};

// A finite-dimensional associative unital *-algebra over R, described by
// structure constants on a fixed component basis.  Instances are interned;
// compare descriptors by pointer.
struct Algebra {
    struct Term {
        int k;
        double c;
    };

    std::string name;
    int dim = 0;           // component count
    bool has_delta = false;
    int base_dim = 0;      // = dim (no delta) or dim/2
    double s = +1.0;       // involution sign on delta
    bool commutative = false;
    const Algebra* base = nullptr;  // base *-algebra when has_delta

    // e_i * e_j = sum of terms; all shipped algebras are monomial but the
    // generic adjoin path may produce several terms per pair.
    std::vector<std::vector<Term>> mul_table;  // dim*dim entries, row-major
    LinearMap involution;
    LinearMap phi;  // on base components; identity map when !has_delta

    int delta_index() const { return base_dim; }  // first delta component

    const std::vector<Term>& mul_terms(int i, int j) const {
        return mul_table[static_cast<size_t>(i) * dim + j];
    }
};

// Immutable scalar value over one algebra.
struct Scalar {
    const Algebra* alg = nullptr;
    Components c{};

    Scalar() = default;
    explicit Scalar(const Algebra* a) : alg(a) {}
    Scalar(const Algebra* a, const Components& comps) : alg(a), c(comps) {}

    double operator[](int k) const { return c[static_cast<size_t>(k)]; }
    double& operator[](int k) { return c[static_cast<size_t>(k)]; }

    bool is_exact_zero() const;
    double abs_max() const;     // max component magnitude
    double norm2() const;       // sum of squared components
};

Scalar zero(const Algebra* a);
Scalar one(const Algebra* a);
Scalar basis_element(const Algebra* a, int k);
Scalar delta(const Algebra* a);          // requires has_delta
Scalar from_real(const Algebra* a, double x);

Scalar add(const Scalar& x, const Scalar& y);
Scalar sub(const Scalar& x, const Scalar& y);
Scalar neg(const Scalar& x);
Scalar scale(const Scalar& x, double t);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar involute(const Scalar& x);

// Multiplicative inverse.  Component-exact zero tests decide invertibility;
// callers wanting tolerance-based checks use matrix-level predicates.
Scalar invert(const Scalar& x);

// t with t* = t and t*y*t = 1, for self-adjoint y whose base part is
// positive.  This is the scalar workhorse behind vector normalisation.
Scalar inv_sqrt_selfadjoint(const Scalar& y, double tol = 1e-9);

// The *-isomorphism (a,b)+(a',b')delta -> (a,b)+(a',-b')delta between the
// two involutions on Cl_{1,0,1}.  Involutive; accepts either direction.
Scalar iso_cl101(const Scalar& x);

// Splits w + z*delta of a delta-algebra into base scalars (w, z).
Scalar base_part(const Scalar& x);
Scalar delta_part(const Scalar& x);
Scalar join_delta(const Algebra* a, const Scalar& w, const Scalar& z);

// Builds the *-algebra R[[delta]] from a base *-algebra, a candidate
// automorphism phi and the involution sign on delta.  phi is validated
// exactly on all ordered pairs of basis elements; anti-automorphisms (such
// as the quaternion involution) are rejected.
const Algebra* adjoin_delta(const Algebra* base, const LinearMap& phi, double s,
                            const std::string& name);

// --- registry of shipped algebras ---------------------------------------

const Algebra* alg_real();
const Algebra* alg_complex();     // (re, im)
const Algebra* alg_quaternion();  // (w, x, y, z)
const Algebra* alg_rr_id();       // R(+)R with *_1, components (a, b)
const Algebra* alg_rr_swap();     // R(+)R with *_{-1}
const Algebra* alg_dual();        // (st, nst), trivial involution
const Algebra* alg_dual_neg();    // (st, nst), eps* = -eps; unpack targets only
const Algebra* alg_cl101_pos();   // (a, b, a', b'), *_1 "SVD algebra"
const Algebra* alg_cl101_neg();
const Algebra* alg_cl011_pos();   // (Re w, Im w, Re z, Im z), *_1 "Takagi algebra"
const Algebra* alg_cl011_neg();   // "skew-Takagi algebra"
const Algebra* alg_quatdual();    // (q0, q1), H (x) D with *_{-1}

// Lookup by tag name ("real", "cl101_pos", ...); nullptr when unknown.
const Algebra* algebra_by_name(const std::string& name);

// All public algebras, in registry order (excludes dual_neg).
const std::vector<const Algebra*>& shipped_algebras();

}  // namespace starlin
