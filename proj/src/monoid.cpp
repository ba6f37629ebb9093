#include "starlin/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "starlin/base_spectral.hpp"
#include "starlin/classic.hpp"
#include "starlin/convert.hpp"
#include "starlin/infinitesimal.hpp"
#include "starlin/random.hpp"

namespace starlin {

namespace {

std::vector<double> diag_values(const StarMatrix& d, int comp) {
    std::vector<double> v;
    for (int i = 0; i < d.rows(); ++i) v.push_back(d.at(i, i, comp));
    return v;
}

void sort_desc(std::vector<double>& v) { std::sort(v.begin(), v.end(), std::greater<double>()); }

void sort_pairs(std::vector<std::array<double, 2>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] > b[0];
        return a[1] > b[1];
    });
}

RationalMatrix to_rational(const StarMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = rational_from_double(m.at(i, j, 0));
    return r;
}

}  // namespace

SpectrumClass spectrum_of(const StarMatrix& h, double tol) {
    const Algebra* a = h.algebra();
    SpectrumClass s;
    s.algebra = a->name;

    if (a == alg_real()) {
        EigenDecomp d = eig_real_symmetric(h, tol);
        s.eigs = diag_values(d.D, 0);
        sort_desc(s.eigs);
        return s;
    }
    if (a == alg_complex()) {
        EigenDecomp d = eig_complex_hermitian(h, tol);
        s.eigs = diag_values(d.D, 0);
        sort_desc(s.eigs);
        return s;
    }
    if (a == alg_quaternion()) {
        EigenDecomp d = eig_quaternion_hermitian(h, tol);
        s.eigs = diag_values(d.D, 0);
        sort_desc(s.eigs);
        return s;
    }
    if (a == alg_rr_id()) {
        PairDiagResult pd = pair_diag(rr_left(h), rr_right(h), tol);
        s.eigs = diag_values(pd.d, 0);
        s.eigs_right = diag_values(pd.d, 1);
        sort_desc(s.eigs);
        sort_desc(s.eigs_right);
        return s;
    }
    if (a == alg_dual()) {
        EigenDecomp d = eig_dual_selfadjoint(h, tol);
        for (int i = 0; i < d.D.rows(); ++i) s.duals.push_back({d.D.at(i, i, 0), d.D.at(i, i, 1)});
        sort_pairs(s.duals);
        return s;
    }
    if (a == alg_cl101_pos() || a == alg_cl101_neg()) {
        SvdAlgSpectrum sp = (a == alg_cl101_pos())
                                ? spectrum_svdalg(h, tol)
                                : spectrum_svdalg(iso_cl101(h), tol);
        s.duals = sp.C;
        s.L = sp.L;
        s.R = sp.R;
        return s;
    }
    if (a == alg_cl011_pos()) {
        EigenDecomp d = spectral_takagi_alg(h, tol);
        for (int i = 0; i < d.D.rows(); ++i) s.duals.push_back({d.D.at(i, i, 0), d.D.at(i, i, 2)});
        sort_pairs(s.duals);
        return s;
    }
    if (a == alg_cl011_neg()) {
        EigenDecomp d = spectral_skewtakagi_alg(h, tol);
        int i = 0;
        while (i < d.D.rows()) {
            if (i + 1 < d.D.rows() && d.D.at(i + 1, i, 2) != 0.0) {
                s.blocks.push_back({d.D.at(i, i, 0), d.D.at(i + 1, i, 2)});
                i += 2;
            } else {
                s.singles.push_back(d.D.at(i, i, 0));
                ++i;
            }
        }
        sort_pairs(s.blocks);
        sort_desc(s.singles);
        return s;
    }
    if (a == alg_quatdual()) {
        EigenDecomp d = spectral_quatdual(h, tol);
        for (int i = 0; i < d.D.rows(); ++i) {
            double mu = d.D.at(i, i, 5);
            if (mu != 0.0)
                s.blocks.push_back({d.D.at(i, i, 0), mu});
            else
                s.singles.push_back(d.D.at(i, i, 0));
        }
        sort_pairs(s.blocks);
        sort_desc(s.singles);
        return s;
    }
    if (a == alg_rr_swap()) {
        // self-adjoint means [M, M]; the class is the Jordan block multiset of M
        StarMatrix m = bracket_left(h);
        StarMatrix k = bracket_right(h);
        if (sub(m, k).frobenius() > 1e-12 * (1.0 + h.frobenius()))
            throw precondition_error("spectrum_of: (R(+)R, *_{-1}) input is not of the form [M,M]");
        JordanResult jr = jordan(to_rational(m));
        for (const JordanBlockInfo& b : jr.blocks)
            s.jordan_blocks.emplace_back(rational_to_string(b.eigenvalue), b.size);
        std::sort(s.jordan_blocks.begin(), s.jordan_blocks.end());
        return s;
    }
    throw precondition_error("spectrum_of: unsupported algebra '" + a->name + "'");
}

SpectrumClass spectrum_add(const SpectrumClass& a, const SpectrumClass& b) {
    if (a.algebra != b.algebra)
        throw algebra_mismatch_error("spectrum_add: algebra tags differ (" + a.algebra + " vs " +
                                     b.algebra + ")");
    SpectrumClass s = a;
    auto extend = [](auto& dst, const auto& src) { dst.insert(dst.end(), src.begin(), src.end()); };
    extend(s.eigs, b.eigs);
    extend(s.eigs_right, b.eigs_right);
    extend(s.duals, b.duals);
    extend(s.L, b.L);
    extend(s.R, b.R);
    extend(s.blocks, b.blocks);
    extend(s.singles, b.singles);
    extend(s.jordan_blocks, b.jordan_blocks);
    sort_desc(s.eigs);
    sort_desc(s.eigs_right);
    sort_pairs(s.duals);
    sort_desc(s.L);
    sort_desc(s.R);
    sort_pairs(s.blocks);
    sort_desc(s.singles);
    std::sort(s.jordan_blocks.begin(), s.jordan_blocks.end());
    return s;
}

namespace {

long long quantise(double x, double grid) { return std::llround(x / grid); }

bool lists_equal(const std::vector<double>& a, const std::vector<double>& b, double grid) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (quantise(a[i], grid) != quantise(b[i], grid)) return false;
    return true;
}

bool pairs_equal(const std::vector<std::array<double, 2>>& a,
                 const std::vector<std::array<double, 2>>& b, double grid) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < 2; ++k)
            if (quantise(a[i][static_cast<size_t>(k)], grid) !=
                quantise(b[i][static_cast<size_t>(k)], grid))
                return false;
    return true;
}

double lists_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double w = 0.0;
    for (size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
    return w;
}

double pairs_distance(const std::vector<std::array<double, 2>>& a,
                      const std::vector<std::array<double, 2>>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double w = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < 2; ++k)
            w = std::max(w, std::abs(a[i][static_cast<size_t>(k)] - b[i][static_cast<size_t>(k)]));
    return w;
}

}  // namespace

bool spectrum_equal(const SpectrumClass& a, const SpectrumClass& b, double grid) {
    return a.algebra == b.algebra && lists_equal(a.eigs, b.eigs, grid) &&
           lists_equal(a.eigs_right, b.eigs_right, grid) && pairs_equal(a.duals, b.duals, grid) &&
           lists_equal(a.L, b.L, grid) && lists_equal(a.R, b.R, grid) &&
           pairs_equal(a.blocks, b.blocks, grid) && lists_equal(a.singles, b.singles, grid) &&
           a.jordan_blocks == b.jordan_blocks;
}

double spectrum_distance(const SpectrumClass& a, const SpectrumClass& b) {
    if (a.algebra != b.algebra || a.jordan_blocks != b.jordan_blocks)
        return std::numeric_limits<double>::infinity();
    double w = 0.0;
    w = std::max(w, lists_distance(a.eigs, b.eigs));
    w = std::max(w, lists_distance(a.eigs_right, b.eigs_right));
    w = std::max(w, pairs_distance(a.duals, b.duals));
    w = std::max(w, lists_distance(a.L, b.L));
    w = std::max(w, lists_distance(a.R, b.R));
    w = std::max(w, pairs_distance(a.blocks, b.blocks));
    w = std::max(w, lists_distance(a.singles, b.singles));
    return w;
}

std::string to_string(const SpectrumClass& s) {
    std::ostringstream os;
    os.precision(12);
    os << "spectrum{" << s.algebra;
    auto list = [&](const char* name, const std::vector<double>& v) {
        if (v.empty()) return;
        os << ", " << name << "=[";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "]";
    };
    auto plist = [&](const char* name, const std::vector<std::array<double, 2>>& v) {
        if (v.empty()) return;
        os << ", " << name << "=[";
        for (size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << "(" << v[i][0] << ", " << v[i][1] << ")";
        os << "]";
    };
    list("eigs", s.eigs);
    list("eigs_right", s.eigs_right);
    plist("C", s.duals);
    list("L", s.L);
    list("R", s.R);
    plist("blocks", s.blocks);
    list("singles", s.singles);
    if (!s.jordan_blocks.empty()) {
        os << ", jordan=[";
        for (size_t i = 0; i < s.jordan_blocks.size(); ++i)
            os << (i ? ", " : "") << "J_" << s.jordan_blocks[i].second << "("
               << s.jordan_blocks[i].first << ")";
        os << "]";
    }
    os << "}";
    return os.str();
}

// ----------------------------------------------------------------- probe

namespace {

// integer matrix with prescribed small-rational Jordan structure, built as
// P J P^{-1} with P unimodular so every entry stays exact in doubles
StarMatrix random_rational_jordan_matrix(int dim, Rng& rng) {
    StarMatrix j(alg_real(), dim, dim);
    std::uniform_int_distribution<int> ev(-2, 2);
    int pos = 0;
    while (pos < dim) {
        int size = 1 + static_cast<int>(rng() % 2u);
        if (pos + size > dim) size = 1;
        double lambda = ev(rng);
        for (int k = 0; k < size; ++k) {
            j.at(pos + k, pos + k, 0) = lambda;
            if (k + 1 < size) j.at(pos + k, pos + k + 1, 0) = 1.0;
        }
        pos += size;
    }
    StarMatrix p = random_unimodular(dim, rng);
    RationalMatrix pinv = inverse(to_rational(p));
    StarMatrix pinv_d(alg_real(), dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) pinv_d.at(r, c, 0) = rational_to_double(pinv.at(r, c));
    return mul(p, mul(j, pinv_d));
}

StarMatrix probe_self_adjoint(const Algebra* a, int dim, Rng& rng) {
    if (a == alg_rr_swap()) {
        StarMatrix m = random_rational_jordan_matrix(dim, rng);
        return bracket(m, m);
    }
    return random_self_adjoint(a, dim, rng);
}

}  // namespace

ProbeReport probe_conjecture(const std::string& algebra, int dim, int trials,
                             std::uint64_t seed) {
    const Algebra* a = algebra_by_name(algebra);
    if (!a || a == alg_dual_neg())
        throw precondition_error("probe_conjecture: unsupported algebra tag '" + algebra + "'");

    ProbeReport rep;
    rep.algebra = algebra;
    rep.dim = dim;
    rep.trials = trials;
    rep.seed = seed;

    for (int t = 0; t < trials; ++t) {
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
        bool violated = false;

        StarMatrix ha = probe_self_adjoint(a, dim, rng);
        StarMatrix hb = probe_self_adjoint(a, dim, rng);
        StarMatrix hc = probe_self_adjoint(a, dim, rng);

        SpectrumClass sa = spectrum_of(ha);
        SpectrumClass sb = spectrum_of(hb);
        SpectrumClass sc = spectrum_of(hc);

        // (i) additivity over direct sums
        {
            SpectrumClass lhs = spectrum_of(direct_sum(ha, hb));
            SpectrumClass rhs = spectrum_add(sa, sb);
            ++rep.additivity_checked;
            if (!spectrum_equal(lhs, rhs)) {
                ++rep.additivity_failed;
                violated = true;
            } else
                rep.worst_distance = std::max(rep.worst_distance, spectrum_distance(lhs, rhs));
        }

        // (ii) conjugation invariance
        StarMatrix hconj;
        if (a == alg_rr_swap()) {
            StarMatrix p = random_unimodular(dim, rng);
            StarMatrix pinv_real = StarMatrix(alg_real(), dim, dim);
            {
                RationalMatrix pr = to_rational(p);
                RationalMatrix pi = inverse(pr);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        pinv_real.at(i, j, 0) = rational_to_double(pi.at(i, j));
            }
            StarMatrix m = bracket_left(ha);
            StarMatrix pmp = mul(p, mul(m, pinv_real));
            hconj = bracket(pmp, pmp);
        } else {
            StarMatrix u = random_unitary(a, dim, rng);
            hconj = mul(u, mul(ha, adjoint(u)));
        }
        {
            SpectrumClass lhs = spectrum_of(hconj);
            ++rep.conjugation_checked;
            if (!spectrum_equal(lhs, sa)) {
                ++rep.conjugation_failed;
                violated = true;
            } else
                rep.worst_distance = std::max(rep.worst_distance, spectrum_distance(lhs, sa));
        }

        // (iii) cancellation: A (+) C ~ B (+) C with B ~ A must give A ~ B
        {
            SpectrumClass s1 = spectrum_of(direct_sum(ha, hc));
            SpectrumClass s2 = spectrum_of(direct_sum(hconj, hc));
            ++rep.cancellation_checked;
            bool sums_equal = spectrum_equal(s1, s2);
            bool parts_equal = spectrum_equal(sa, spectrum_of(hconj));
            if (sums_equal && !parts_equal) {
                ++rep.cancellation_failed;
                violated = true;
            }
            // random unequal pair as a negative control: if the sums with the
            // common summand differ, the parts must differ too
            SpectrumClass s3 = spectrum_of(direct_sum(hb, hc));
            if (!spectrum_equal(s1, s3) && spectrum_equal(sa, sb)) {
                ++rep.cancellation_failed;
                violated = true;
            }
        }

        if (violated) rep.violation_trials.push_back(static_cast<std::uint64_t>(t));
    }
    return rep;
}

std::string to_string(const ProbeReport& r) {
    std::ostringstream os;
    os << "conjecture probe: algebra=" << r.algebra << " dim=" << r.dim
       << " trials=" << r.trials << " seed=" << r.seed << "\n";
    os << "  additivity:   " << (r.additivity_checked - r.additivity_failed) << "/"
       << r.additivity_checked << " passed\n";
    os << "  conjugation:  " << (r.conjugation_checked - r.conjugation_failed) << "/"
       << r.conjugation_checked << " passed\n";
    os << "  cancellation: " << (r.cancellation_checked - r.cancellation_failed) << "/"
       << r.cancellation_checked << " passed\n";
    os.precision(3);
    os << "  worst residual among passing comparisons: " << std::scientific << r.worst_distance
       << "\n";
    if (r.violation_trials.empty())
        os << "  violations: none\n";
    else {
        os << "  violations at trials:";
        for (std::uint64_t t : r.violation_trials) os << " " << t;
        os << "\n";
    }
    return os.str();
}

}  // namespace starlin
