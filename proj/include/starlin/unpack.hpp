#pragma once

#include "starlin/matrix.hpp"

namespace starlin {

// A matched (unpack, unwind) pair lowering matrices and vectors over a
// bigger algebra to a smaller one, with rewind the exact inverse of unwind.
// The maps satisfy
//   unpack(X Y)  = unpack(X) unpack(Y)
//   unpack(X + Y) = unpack(X) + unpack(Y)
//   unwind(X v)  = unpack(X) unwind(v)
//   unwind(u + v) = unwind(u) + unwind(v)
//   unpack(X*)   = unpack(X)^dagger  (dagger = target adjoint below)
// For the skew-Takagi and quaternion-dual pairs the target adjoint is the
// transpose combined with eps -> -eps; otherwise it is the plain adjoint.
struct UnpackPair {
    std::string name;
    const Algebra* source;
    const Algebra* target;
    int dim_factor;             // a k-vector maps to a (dim_factor*k)-vector
    bool eps_negated_adjoint;
    bool preserves_self_inner;  // v*v equals unwind(v)* unwind(v)
    StarMatrix (*unpack)(const StarMatrix&);
    StarMatrix (*unwind)(const StarMatrix&);
    StarMatrix (*rewind)(const StarMatrix&);
};

// Adjoint on the pair's target side (honours eps_negated_adjoint).
StarMatrix target_adjoint(const UnpackPair& p, const StarMatrix& x);

const UnpackPair& pair_complex();          // C -> R
const UnpackPair& pair_quaternion();       // H -> R (through C)
const UnpackPair& pair_quaternion_skew();  // H -> C
const UnpackPair& pair_takagi();           // Cl_{0,1,1} *_1   -> D
const UnpackPair& pair_skewtakagi();       // Cl_{0,1,1} *_{-1} -> D
const UnpackPair& pair_svdalg();           // Cl_{1,0,1} *_1   -> D
const UnpackPair& pair_quatdual();         // H (x) D -> D

// Deliberately wrong C -> R pair (unwind(u + vi) = (u+v, u)); multiplicative
// but fails norm transport.  Ships as a regression fixture.
const UnpackPair& pair_bad_unwind();

const std::vector<const UnpackPair*>& shipped_pairs();  // the seven good ones

}  // namespace starlin
