#pragma once

#include "starlin/matrix.hpp"

namespace starlin {

// Component-plane conversions between matrices over related algebras.
// These are mechanical reshuffles; every spectral routine leans on them.

// complex <-> two real planes
StarMatrix complex_from(const StarMatrix& re, const StarMatrix& im);
StarMatrix re_part(const StarMatrix& c);
StarMatrix im_part(const StarMatrix& c);
StarMatrix mat_conj(const StarMatrix& c);  // entrywise complex conjugate

// dual <-> standard/non-standard real planes
StarMatrix dual_from(const StarMatrix& st, const StarMatrix& nst);
StarMatrix st_part(const StarMatrix& d);
StarMatrix nst_part(const StarMatrix& d);

// quaternion <-> four real planes (1, i, j, k)
StarMatrix quaternion_from(const StarMatrix& a, const StarMatrix& b, const StarMatrix& c,
                           const StarMatrix& d);
StarMatrix quat_component(const StarMatrix& q, int k);

// R(+)R <-> two real planes
StarMatrix rr_from(const Algebra* rr, const StarMatrix& left, const StarMatrix& right);
StarMatrix rr_left(const StarMatrix& x);
StarMatrix rr_right(const StarMatrix& x);

// delta-algebra <-> base-algebra planes (w + z delta)
StarMatrix mat_base_part(const StarMatrix& x);
StarMatrix mat_delta_part(const StarMatrix& x);
StarMatrix mat_join_delta(const Algebra* alg, const StarMatrix& w, const StarMatrix& z);
StarMatrix embed_base(const Algebra* alg, const StarMatrix& w);  // w + 0 delta

// real scalar diagonal of the given size
StarMatrix real_diag(const std::vector<double>& vals);

}  // namespace starlin
