#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "starlin/errors.hpp"

namespace starlin {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Dense exact-rational matrix for the Jordan path.
struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static RationalMatrix identity(int n);

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

RationalMatrix add(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix sub(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix mul(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix transpose(const RationalMatrix& x);
bool equal(const RationalMatrix& x, const RationalMatrix& y);

int rank(const RationalMatrix& x);
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& x);
RationalMatrix inverse(const RationalMatrix& x);  // throws zero_divisor_error if singular

// Characteristic polynomial coefficients, monic: p(x) = x^n + c[1] x^{n-1} + ... + c[n].
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

// All rational roots with multiplicities; throws precondition_error naming
// the residual irreducible factor when the polynomial has irrational or
// complex roots.
std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& monic);

// "p/q" (or "p") parsing and printing
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

// Exact conversion: every double is a dyadic rational.
Rational rational_from_double(double x);
double rational_to_double(const Rational& r);

}  // namespace starlin
