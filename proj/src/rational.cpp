#include "starlin/rational.hpp"

#include <algorithm>
#include <cmath>

namespace starlin {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix add(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}

RationalMatrix sub(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

RationalMatrix mul(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols != y.rows) throw precondition_error("rational mul: shape mismatch");
    RationalMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

RationalMatrix transpose(const RationalMatrix& x) {
    RationalMatrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

bool equal(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

namespace {

// reduced row echelon form; returns pivot columns
std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = m.at(row, col);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const RationalMatrix& x) {
    RationalMatrix m = x;
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& x) {
    RationalMatrix m = x;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(x.cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < x.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(x.cols));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix& x) {
    if (x.rows != x.cols) throw precondition_error("rational inverse: non-square");
    const int n = x.rows;
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] >= n)
        throw zero_divisor_error("rational inverse: singular matrix");
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
    // Faddeev-LeVerrier
    if (m.rows != m.cols) throw precondition_error("characteristic_polynomial: non-square");
    const int n = m.rows;
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    RationalMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[static_cast<size_t>(k)] = -tr / k;
        if (k < n) {
            RationalMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[static_cast<size_t>(k)];
            mk = mul(m, shifted);
        }
    }
    return c;
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& value) {
    BigInt v = value < 0 ? BigInt(-value) : value;
    if (v == 0) return {};
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= v; ++p) {
        if (p > 2000000)
            throw precondition_error(
                "rational_roots: coefficient too large to enumerate root candidates");
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (v > 1) factors.emplace_back(v, 1);
    std::vector<BigInt> divs{1};
    for (auto& [p, e] : factors) {
        size_t base = divs.size();
        BigInt pe = 1;
        for (int t = 1; t <= e; ++t) {
            pe *= p;
            for (size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (const Rational& ck : c) acc = acc * x + ck;
    return acc;
}

// divide monic-coefficient list by (x - r); assumes r is a root
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
    std::vector<Rational> out(c.size() - 1);
    Rational carry = 0;
    for (size_t k = 0; k + 1 < c.size(); ++k) {
        carry = carry * r + c[k];
        out[k] = carry;
    }
    return out;
}

std::string poly_to_string(const std::vector<Rational>& c) {
    std::string s;
    const int deg = static_cast<int>(c.size()) - 1;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0 && k != 0) continue;
        if (!s.empty()) s += " + ";
        s += rational_to_string(c[k]);
        int e = deg - static_cast<int>(k);
        if (e > 0) s += "*x^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& monic) {
    std::vector<Rational> c = monic;
    std::vector<std::pair<Rational, int>> roots;

    auto take_root = [&](const Rational& r) {
        int mult = 0;
        while (c.size() > 1 && eval_poly(c, r) == 0) {
            c = deflate(c, r);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    };

    take_root(Rational(0));
    if (c.size() > 1) {
        // clear denominators to an integer polynomial
        BigInt lcm = 1;
        for (const Rational& ck : c) {
            BigInt den = denominator(ck);
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<BigInt> ic;
        for (const Rational& ck : c) ic.push_back(numerator(Rational(ck * lcm)));
        BigInt lead = ic.front(), cons = ic.back();
        std::vector<BigInt> ps = divisors_of(cons), qs = divisors_of(lead);
        for (const BigInt& p : ps)
            for (const BigInt& q : qs) {
                if (gcd(p, q) != 1) continue;
                take_root(Rational(p, q));
                take_root(Rational(-p, q));
                if (c.size() <= 1) break;
            }
    }
    if (c.size() > 1)
        throw precondition_error(
            "rational_roots: no rational factorisation; irreducible remainder " +
            poly_to_string(c));
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw precondition_error("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw precondition_error("parse_rational: cannot parse '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw precondition_error("rational_from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    BigInt m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(m);
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << (-exp));
    return r;
}

double rational_to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace starlin
