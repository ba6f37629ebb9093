#include "starlin/algebra.hpp"

#include <cmath>
#include <cstring>
#include <deque>
#include <map>

namespace starlin {

// ---------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity(int dim) {
    LinearMap f;
    f.dim = dim;
    for (int i = 0; i < dim; ++i) f.m[static_cast<size_t>(i) * kMaxComponents + i] = 1.0;
    return f;
}

LinearMap LinearMap::signed_perm(int dim, const std::vector<int>& src,
                                 const std::vector<double>& sign) {
    LinearMap f;
    f.dim = dim;
    for (int i = 0; i < dim; ++i)
        f.m[static_cast<size_t>(i) * kMaxComponents + src[static_cast<size_t>(i)]] =
            sign[static_cast<size_t>(i)];
    return f;
}

Components LinearMap::apply(const Components& x) const {
    Components y{};
    for (int i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (int j = 0; j < dim; ++j)
            acc += m[static_cast<size_t>(i) * kMaxComponents + j] * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = acc;
    }
    return y;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
    LinearMap f;
    f.dim = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double acc = 0.0;
            for (int k = 0; k < dim; ++k)
                acc += m[static_cast<size_t>(i) * kMaxComponents + k] *
                       other.m[static_cast<size_t>(k) * kMaxComponents + j];
            f.m[static_cast<size_t>(i) * kMaxComponents + j] = acc;
        }
    return f;
}

bool LinearMap::equals(const LinearMap& other, double tol) const {
    if (dim != other.dim) return false;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            size_t idx = static_cast<size_t>(i) * kMaxComponents + j;
            if (std::abs(m[idx] - other.m[idx]) > tol) return false;
        }
    return true;
}

// ------------------------------------------------------------------ Scalar

bool Scalar::is_exact_zero() const {
    for (int k = 0; k < alg->dim; ++k)
        if (c[static_cast<size_t>(k)] != 0.0) return false;
    return true;
}

double Scalar::abs_max() const {
    double v = 0.0;
    for (int k = 0; k < alg->dim; ++k) v = std::max(v, std::abs(c[static_cast<size_t>(k)]));
    return v;
}

double Scalar::norm2() const {
    double v = 0.0;
    for (int k = 0; k < alg->dim; ++k) v += c[static_cast<size_t>(k)] * c[static_cast<size_t>(k)];
    return v;
}

namespace {

struct AlgebraStore {
    std::deque<Algebra> items;  // stable addresses
};

AlgebraStore& store() {
    static AlgebraStore s;
    return s;
}

void require_same(const Scalar& x, const Scalar& y) {
    if (x.alg != y.alg)
        throw algebra_mismatch_error("scalar operands belong to different algebras");
}

// unit element components (not always a basis element: (1,1) for R(+)R)
Components unit_components(const Algebra* a);

}  // namespace

Scalar zero(const Algebra* a) { return Scalar(a); }

Scalar one(const Algebra* a) { return Scalar(a, unit_components(a)); }

Scalar basis_element(const Algebra* a, int k) {
    Scalar x(a);
    x[k] = 1.0;
    return x;
}

Scalar delta(const Algebra* a) {
    if (!a->has_delta) throw precondition_error("algebra '" + a->name + "' has no delta");
    Scalar w = zero(a->base);
    Scalar z = one(a->base);
    return join_delta(a, w, z);
}

Scalar from_real(const Algebra* a, double x) {
    Scalar v = one(a);
    for (int k = 0; k < a->dim; ++k) v[k] *= x;
    return v;
}

Scalar add(const Scalar& x, const Scalar& y) {
    require_same(x, y);
    Scalar r(x.alg);
    for (int k = 0; k < x.alg->dim; ++k) r[k] = x[k] + y[k];
    return r;
}

Scalar sub(const Scalar& x, const Scalar& y) {
    require_same(x, y);
    Scalar r(x.alg);
    for (int k = 0; k < x.alg->dim; ++k) r[k] = x[k] - y[k];
    return r;
}

Scalar neg(const Scalar& x) {
    Scalar r(x.alg);
    for (int k = 0; k < x.alg->dim; ++k) r[k] = -x[k];
    return r;
}

Scalar scale(const Scalar& x, double t) {
    Scalar r(x.alg);
    for (int k = 0; k < x.alg->dim; ++k) r[k] = x[k] * t;
    return r;
}

Scalar mul(const Scalar& x, const Scalar& y) {
    require_same(x, y);
    const Algebra* a = x.alg;
    Scalar r(a);
    for (int i = 0; i < a->dim; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (int j = 0; j < a->dim; ++j) {
            const double prod = xi * y[j];
            if (prod == 0.0) continue;
            for (const Algebra::Term& t : a->mul_terms(i, j)) r[t.k] += prod * t.c;
        }
    }
    return r;
}

Scalar involute(const Scalar& x) { return Scalar(x.alg, x.alg->involution.apply(x.c)); }

Scalar base_part(const Scalar& x) {
    const Algebra* a = x.alg;
    if (!a->has_delta) throw precondition_error("base_part: algebra has no delta");
    Scalar w(a->base);
    for (int k = 0; k < a->base_dim; ++k) w[k] = x[k];
    return w;
}

Scalar delta_part(const Scalar& x) {
    const Algebra* a = x.alg;
    if (!a->has_delta) throw precondition_error("delta_part: algebra has no delta");
    Scalar z(a->base);
    for (int k = 0; k < a->base_dim; ++k) z[k] = x[a->base_dim + k];
    return z;
}

Scalar join_delta(const Algebra* a, const Scalar& w, const Scalar& z) {
    if (!a->has_delta) throw precondition_error("join_delta: algebra has no delta");
    Scalar x(a);
    for (int k = 0; k < a->base_dim; ++k) {
        x[k] = w[k];
        x[a->base_dim + k] = z[k];
    }
    return x;
}

// ------------------------------------------------------------------ invert

namespace {

Scalar invert_primitive(const Scalar& x) {
    const Algebra* a = x.alg;
    const std::string& n = a->name;
    if (n == "real") {
        if (x[0] == 0.0) throw zero_divisor_error("invert: zero real scalar");
        Scalar r(a);
        r[0] = 1.0 / x[0];
        return r;
    }
    if (n == "complex") {
        double q = x[0] * x[0] + x[1] * x[1];
        if (q == 0.0) throw zero_divisor_error("invert: zero complex scalar");
        Scalar r(a);
        r[0] = x[0] / q;
        r[1] = -x[1] / q;
        return r;
    }
    if (n == "quaternion") {
        double q = x.norm2();
        if (q == 0.0) throw zero_divisor_error("invert: zero quaternion");
        Scalar r(a);
        r[0] = x[0] / q;
        for (int k = 1; k < 4; ++k) r[k] = -x[k] / q;
        return r;
    }
    if (n == "rr_id" || n == "rr_swap") {
        if (x[0] == 0.0 || x[1] == 0.0)
            throw zero_divisor_error("invert: zero divisor in R(+)R (a component is 0)");
        Scalar r(a);
        r[0] = 1.0 / x[0];
        r[1] = 1.0 / x[1];
        return r;
    }
    throw precondition_error("invert: unsupported algebra '" + n + "'");
}

}  // namespace

Scalar invert(const Scalar& x) {
    const Algebra* a = x.alg;
    if (!a->has_delta) return invert_primitive(x);
    // (w + z d)^-1 = w^-1 - w^-1 z phi(w^-1) d
    Scalar w = base_part(x), z = delta_part(x);
    Scalar wi = invert(w);
    Scalar phi_wi(a->base, a->phi.apply(wi.c));
    Scalar zc = neg(mul(mul(wi, z), phi_wi));
    return join_delta(a, wi, zc);
}

// ------------------------------------------------------- inv_sqrt_selfadjoint

Scalar inv_sqrt_selfadjoint(const Scalar& y0, double tol) {
    const Algebra* a = y0.alg;
    // Symmetrise first; the closed forms below assume y* = y.
    Scalar y = scale(add(y0, involute(y0)), 0.5);
    const std::string& n = a->name;

    auto check_pos = [&](double v) {
        if (!(v > tol * tol)) throw degenerate_norm_error("inv_sqrt: base part not positive");
    };

    if (n == "real") {
        check_pos(y[0]);
        Scalar r(a);
        r[0] = 1.0 / std::sqrt(y[0]);
        return r;
    }
    if (n == "complex" || n == "quaternion") {
        check_pos(y[0]);
        Scalar r(a);
        r[0] = 1.0 / std::sqrt(y[0]);
        return r;
    }
    if (n == "rr_id") {
        check_pos(y[0]);
        check_pos(y[1]);
        Scalar r(a);
        r[0] = 1.0 / std::sqrt(y[0]);
        r[1] = 1.0 / std::sqrt(y[1]);
        return r;
    }
    if (n == "rr_swap") {
        // self-adjoint means a = b
        double v = 0.5 * (y[0] + y[1]);
        check_pos(v);
        Scalar r(a);
        r[0] = r[1] = 1.0 / std::sqrt(v);
        return r;
    }
    if (n == "dual" || n == "dual_neg") {
        check_pos(y[0]);
        Scalar r(a);
        double s = std::sqrt(y[0]);
        r[0] = 1.0 / s;
        r[1] = -0.5 * y[1] / (y[0] * s);
        return r;
    }
    if (a->has_delta && (a->base->name == "complex" || a->base->name == "quaternion")) {
        // y = a + z d with a real; t = a^{-1/2} - z/(2 a^{3/2}) d
        double av = y[0];
        check_pos(av);
        double sq = std::sqrt(av);
        Scalar w = zero(a->base);
        w[0] = 1.0 / sq;
        Scalar z = delta_part(y);
        Scalar g = scale(z, -0.5 / (av * sq));
        return join_delta(a, w, g);
    }
    if (a->has_delta && (a->base->name == "rr_id" || a->base->name == "rr_swap")) {
        // Cl_{1,0,1}: y = (p,q) + (r, sr)delta, solve t = (al,be) + (g, sg)delta
        double p = y[0], q = y[1];
        check_pos(p);
        check_pos(q);
        double sgn = (a->s >= 0.0) ? 1.0 : -1.0;
        double r = 0.5 * (y[2] + sgn * y[3]);
        double al = 1.0 / std::sqrt(p), be = 1.0 / std::sqrt(q);
        double g = -al * be * r / (al * p + be * q);
        Scalar t(a);
        t[0] = al;
        t[1] = be;
        t[2] = g;
        t[3] = sgn * g;
        return t;
    }
    if (a->has_delta && a->base->name == "real") {
        check_pos(y[0]);
        Scalar t(a);
        double s = std::sqrt(y[0]);
        t[0] = 1.0 / s;
        t[1] = -0.5 * y[1] / (y[0] * s);
        return t;
    }
    throw precondition_error("inv_sqrt: unsupported algebra '" + n + "'");
}

Scalar iso_cl101(const Scalar& x) {
    const Algebra* a = x.alg;
    const Algebra* to = nullptr;
    if (a == alg_cl101_pos())
        to = alg_cl101_neg();
    else if (a == alg_cl101_neg())
        to = alg_cl101_pos();
    else
        throw precondition_error("iso_cl101: scalar is not over Cl_{1,0,1}");
    Scalar r(to);
    r[0] = x[0];
    r[1] = x[1];
    r[2] = x[2];
    r[3] = -x[3];
    return r;
}

// ------------------------------------------------------------- construction

namespace {

Components unit_components(const Algebra* a) {
    Components u{};
    const std::string& n = a->name;
    if (a->has_delta) {
        Components ub = unit_components(a->base);
        for (int k = 0; k < a->base_dim; ++k) u[static_cast<size_t>(k)] = ub[static_cast<size_t>(k)];
        return u;
    }
    if (n == "rr_id" || n == "rr_swap") {
        u[0] = u[1] = 1.0;
        return u;
    }
    u[0] = 1.0;
    return u;
}

Algebra make_primitive(const std::string& name, int dim,
                       const std::vector<std::vector<Algebra::Term>>& table,
                       const LinearMap& invol, bool commutative) {
    Algebra a;
    a.name = name;
    a.dim = dim;
    a.base_dim = dim;
    a.has_delta = false;
    a.mul_table = table;
    a.involution = invol;
    a.phi = LinearMap::identity(dim);
    a.commutative = commutative;
    return a;
}

std::vector<std::vector<Algebra::Term>> monomial_table(
    int dim, const std::vector<std::vector<std::pair<int, double>>>& spec) {
    std::vector<std::vector<Algebra::Term>> t(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto [k, c] = spec[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (c != 0.0) t[static_cast<size_t>(i) * dim + j].push_back({k, c});
        }
    return t;
}

const Algebra* intern(Algebra&& a) {
    store().items.push_back(std::move(a));
    return &store().items.back();
}

const Algebra* build_real() {
    auto table = monomial_table(1, {{{0, 1.0}}});
    return intern(make_primitive("real", 1, table, LinearMap::identity(1), true));
}

const Algebra* build_complex() {
    auto table = monomial_table(2, {{{0, 1.0}, {1, 1.0}},    //
                                    {{1, 1.0}, {0, -1.0}}});
    return intern(make_primitive("complex", 2, table,
                                 LinearMap::signed_perm(2, {0, 1}, {1.0, -1.0}), true));
}

const Algebra* build_quaternion() {
    // basis 1, i, j, k
    auto table = monomial_table(4, {{{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}},
                                    {{1, 1.0}, {0, -1.0}, {3, 1.0}, {2, -1.0}},
                                    {{2, 1.0}, {3, -1.0}, {0, -1.0}, {1, 1.0}},
                                    {{3, 1.0}, {2, 1.0}, {1, -1.0}, {0, -1.0}}});
    return intern(make_primitive(
        "quaternion", 4, table,
        LinearMap::signed_perm(4, {0, 1, 2, 3}, {1.0, -1.0, -1.0, -1.0}), false));
}

const Algebra* build_rr(const std::string& name, bool swap_involution) {
    auto table = monomial_table(2, {{{0, 1.0}, {0, 0.0}},  //
                                    {{0, 0.0}, {1, 1.0}}});
    LinearMap invol = swap_involution ? LinearMap::signed_perm(2, {1, 0}, {1.0, 1.0})
                                      : LinearMap::identity(2);
    return intern(make_primitive(name, 2, table, invol, true));
}

LinearMap rr_swap_map() { return LinearMap::signed_perm(2, {1, 0}, {1.0, 1.0}); }
LinearMap complex_conj_map() { return LinearMap::signed_perm(2, {0, 1}, {1.0, -1.0}); }

}  // namespace

const Algebra* adjoin_delta(const Algebra* base, const LinearMap& phi, double s,
                            const std::string& name) {
    const int b = base->dim;
    if (phi.dim != b)
        throw precondition_error("adjoin_delta: phi dimension does not match base algebra");
    if (s != 1.0 && s != -1.0) throw precondition_error("adjoin_delta: s must be +1 or -1");

    Scalar u = one(base);
    Components phi_u = phi.apply(u.c);
    for (int k = 0; k < b; ++k)
        if (phi_u[static_cast<size_t>(k)] != u[k])
            throw precondition_error("adjoin_delta: phi does not fix the unit");

    // multiplicativity on all ordered basis pairs, exactly
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            Scalar ei = basis_element(base, i), ej = basis_element(base, j);
            Scalar lhs(base, phi.apply(mul(ei, ej).c));
            Scalar rhs = mul(Scalar(base, phi.apply(ei.c)), Scalar(base, phi.apply(ej.c)));
            for (int k = 0; k < b; ++k)
                if (lhs[k] != rhs[k])
                    throw precondition_error(
                        "adjoin_delta: phi is not an algebra automorphism (fails "
                        "multiplicativity on basis pair " +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (!phi.compose(phi).equals(LinearMap::identity(b), 0.0))
        throw precondition_error("adjoin_delta: phi composed with itself is not the identity");

    Algebra a;
    a.name = name;
    a.dim = 2 * b;
    a.base_dim = b;
    a.has_delta = true;
    a.s = s;
    a.base = base;
    a.commutative = false;
    a.phi = phi;

    const int d = a.dim;
    a.mul_table.assign(static_cast<size_t>(d) * d, {});
    auto add_terms = [&](int i, int j, const Scalar& product, int shift) {
        for (int k = 0; k < b; ++k)
            if (product[k] != 0.0)
                a.mul_table[static_cast<size_t>(i) * d + j].push_back({k + shift, product[k]});
    };
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            Scalar ei = basis_element(base, i), ej = basis_element(base, j);
            add_terms(i, j, mul(ei, ej), 0);               // w * w'
            add_terms(i, j + b, mul(ei, ej), b);           // w * (z d)
            Scalar phied(base, phi.apply(ej.c));           // (z d) * w' = z phi(w') d
            add_terms(i + b, j, mul(ei, phied), b);
        }
    // delta half x delta half: zero (delta^2 = 0)

    // (w + z d)* = w* + s phi(z*) d
    const LinearMap& binv = base->involution;
    LinearMap comp = phi.compose(binv);
    LinearMap invol;
    invol.dim = d;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            invol.m[static_cast<size_t>(i) * kMaxComponents + j] =
                binv.m[static_cast<size_t>(i) * kMaxComponents + j];
            invol.m[static_cast<size_t>(i + b) * kMaxComponents + (j + b)] =
                s * comp.m[static_cast<size_t>(i) * kMaxComponents + j];
        }
    a.involution = invol;
    return intern(std::move(a));
}

// ---------------------------------------------------------------- registry

namespace {

struct Registry {
    const Algebra* real;
    const Algebra* complex_;
    const Algebra* quaternion;
    const Algebra* rr_id;
    const Algebra* rr_swap;
    const Algebra* dual;
    const Algebra* dual_neg;
    const Algebra* cl101_pos;
    const Algebra* cl101_neg;
    const Algebra* cl011_pos;
    const Algebra* cl011_neg;
    const Algebra* quatdual;
    std::vector<const Algebra*> shipped;
    std::map<std::string, const Algebra*> by_name;

    Registry() {
        real = build_real();
        complex_ = build_complex();
        quaternion = build_quaternion();
        rr_id = build_rr("rr_id", false);
        rr_swap = build_rr("rr_swap", true);
        dual = adjoin_delta(real, LinearMap::identity(1), +1.0, "dual");
        dual_neg = adjoin_delta(real, LinearMap::identity(1), -1.0, "dual_neg");
        cl101_pos = adjoin_delta(rr_id, rr_swap_map(), +1.0, "cl101_pos");
        cl101_neg = adjoin_delta(rr_id, rr_swap_map(), -1.0, "cl101_neg");
        cl011_pos = adjoin_delta(complex_, complex_conj_map(), +1.0, "cl011_pos");
        cl011_neg = adjoin_delta(complex_, complex_conj_map(), -1.0, "cl011_neg");
        quatdual = adjoin_delta(quaternion, LinearMap::identity(4), -1.0, "quatdual");
        shipped = {real,      complex_,  quaternion, rr_id,     rr_swap,  dual,
                   cl101_pos, cl101_neg, cl011_pos,  cl011_neg, quatdual};
        for (const Algebra* a : shipped) by_name[a->name] = a;
        by_name["dual_neg"] = dual_neg;
    }
};

Registry& reg() {
    static Registry r;
    return r;
}

}  // namespace

const Algebra* alg_real() { return reg().real; }
const Algebra* alg_complex() { return reg().complex_; }
const Algebra* alg_quaternion() { return reg().quaternion; }
const Algebra* alg_rr_id() { return reg().rr_id; }
const Algebra* alg_rr_swap() { return reg().rr_swap; }
const Algebra* alg_dual() { return reg().dual; }
const Algebra* alg_dual_neg() { return reg().dual_neg; }
const Algebra* alg_cl101_pos() { return reg().cl101_pos; }
const Algebra* alg_cl101_neg() { return reg().cl101_neg; }
const Algebra* alg_cl011_pos() { return reg().cl011_pos; }
const Algebra* alg_cl011_neg() { return reg().cl011_neg; }
const Algebra* alg_quatdual() { return reg().quatdual; }

const Algebra* algebra_by_name(const std::string& name) {
    auto it = reg().by_name.find(name);
    return it == reg().by_name.end() ? nullptr : it->second;
}

const std::vector<const Algebra*>& shipped_algebras() { return reg().shipped; }

}  // namespace starlin
