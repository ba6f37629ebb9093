#include <doctest.h>

#include "starlin/infinitesimal.hpp"
#include "starlin/unpack.hpp"

#include "helpers.hpp"

using namespace starlin;
using namespace testutil;

TEST_CASE("block perturbation is exactly unitary") {
    Rng rng(211);
    std::vector<double> lam{5.0, 5.0, 2.0, -1.0};
    // symmetric B gives skew C; the Takagi algebra correction
    StarMatrix b = random_matrix(alg_complex(), 4, 4, rng);
    b = scale(add(b, transpose_plain(b)), 0.5);
    StarMatrix c = lemmas::cluster_correction(b, lam, 1e-8);
    StarMatrix p = mat_join_delta(alg_cl011_pos(), StarMatrix::identity(alg_complex(), 4), c);
    CHECK(mdist(mul(p, adjoint(p)), StarMatrix::identity(alg_cl011_pos(), 4)) == 0.0);
    // within-cluster entries stay untouched
    CHECK(c.get(0, 1).is_exact_zero());
    CHECK(!c.get(0, 2).is_exact_zero());

    // skew B gives symmetric C; the skew-Takagi correction
    StarMatrix bs = random_matrix(alg_complex(), 4, 4, rng);
    bs = scale(sub(bs, transpose_plain(bs)), 0.5);
    StarMatrix cs = lemmas::cluster_correction(bs, lam, 1e-8);
    StarMatrix ps = mat_join_delta(alg_cl011_neg(), StarMatrix::identity(alg_complex(), 4), cs);
    CHECK(mdist(mul(ps, adjoint(ps)), StarMatrix::identity(alg_cl011_neg(), 4)) == 0.0);

    // skew-Hermitian quaternion B gives Hermitian C
    StarMatrix bq = random_matrix(alg_quaternion(), 4, 4, rng);
    bq = scale(sub(bq, adjoint(bq)), 0.5);
    StarMatrix cq = lemmas::cluster_correction(bq, lam, 1e-8);
    StarMatrix pq = mat_join_delta(alg_quatdual(), StarMatrix::identity(alg_quaternion(), 4), cq);
    CHECK(mdist(mul(pq, adjoint(pq)), StarMatrix::identity(alg_quatdual(), 4)) == 0.0);
}

TEST_CASE("semi-eigenpairs promote to unit eigenvectors") {
    // H = diag((2,5)) has the pair eigenvalue (2, 5)
    StarMatrix h(alg_cl101_pos(), 1, 1);
    h.set(0, 0, sc(alg_cl101_pos(), {2, 5, 0, 0}));
    std::vector<SvdEigenvalue> eigs;
    EigenDecomp d = spectral_svdalg(h, -1.0, &eigs);
    REQUIRE(eigs.size() == 1);
    CHECK(!eigs[0].is_dual);
    CHECK(eigs[0].x == doctest::Approx(2.0));
    CHECK(eigs[0].y == doctest::Approx(5.0));
    CHECK(d.recon_residual <= 1e-12);

    // the worked 1x1 example: H = (h,k) + (m,m) delta with h != k
    StarMatrix h2(alg_cl101_pos(), 1, 1);
    h2.set(0, 0, sc(alg_cl101_pos(), {3, 1, 0.5, 0.5}));
    std::vector<SvdEigenvalue> e2;
    EigenDecomp d2 = spectral_svdalg(h2, -1.0, &e2);
    CHECK(!e2[0].is_dual);
    CHECK(e2[0].x == doctest::Approx(3.0));
    CHECK(e2[0].y == doctest::Approx(1.0));
    CHECK(d2.recon_residual <= 1e-13);
    // w* w = 1 holds exactly in structure
    CHECK(sdist(inner(d2.U.col(0), d2.U.col(0)), one(alg_cl101_pos())) <= 1e-13);
}

TEST_CASE("dual eigenvectors normalise to unit eigenvectors") {
    Rng rng(223);
    StarMatrix m = random_matrix(alg_real(), 3, 3, rng);
    StarMatrix h = svd_infinitesimal(m);
    StarMatrix unp = pair_svdalg().unpack(h);
    EigenDecomp ed = eig_dual_selfadjoint(unp);
    int best = 0;
    for (int k = 1; k < 6; ++k)
        if (std::abs(ed.D.at(k, k, 1)) > std::abs(ed.D.at(best, best, 1))) best = k;
    StarMatrix v = pair_svdalg().rewind(ed.U.col(best));
    // v* v = 1/2 + X delta with X real
    Scalar vv = inner(v, v);
    CHECK(vv[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(vv[1] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(vv[2] == doctest::Approx(vv[3]).epsilon(1e-8));
    StarMatrix w = lemmas::normalize_dual_eigenvector(v);
    CHECK(sdist(inner(w, w), one(alg_cl101_pos())) <= 1e-12);
    Scalar lam(alg_cl101_pos());
    lam[0] = lam[1] = ed.D.at(best, best, 0);
    lam[2] = lam[3] = ed.D.at(best, best, 1);
    CHECK(mdist(mul(h, w), scalar_mul_right(w, lam)) <= 1e-10);
}

TEST_CASE("spectral_svdalg on the worked examples") {
    // identity
    StarMatrix id = StarMatrix::identity(alg_cl101_pos(), 3);
    EigenDecomp d = spectral_svdalg(id);
    CHECK(d.recon_residual <= 1e-12);
    CHECK(mdist(d.D, id) <= 1e-12);

    // (M, M^T) delta with M = [[0,1],[0,0]]: dual eigenvalues encode {1, 0}
    StarMatrix m = real_mat(2, 2, {0, 1, 0, 0});
    SvdAlgSpectrum sp = spectrum_svdalg(svd_infinitesimal(m));
    REQUIRE(sp.C.size() == 1);
    CHECK(std::abs(sp.C[0][0]) <= 1e-10);
    CHECK(sp.C[0][1] == doctest::Approx(1.0));
    REQUIRE(sp.L.size() == 1);
    CHECK(std::abs(sp.L[0]) <= 1e-10);
    CHECK(std::abs(sp.R[0]) <= 1e-10);

    // M = diag(3,2): C = {3 delta, 2 delta}, L = R = {}
    SvdAlgSpectrum sp2 = spectrum_svdalg(svd_infinitesimal(real_mat(2, 2, {3, 0, 0, 2})));
    REQUIRE(sp2.C.size() == 2);
    CHECK(sp2.C[0][1] == doctest::Approx(3.0));
    CHECK(sp2.C[1][1] == doctest::Approx(2.0));
    CHECK(sp2.L.empty());
    CHECK(sp2.R.empty());

    // zero matrix: C empty, L = R = zeros
    StarMatrix z(alg_cl101_pos(), 3, 3);
    SvdAlgSpectrum sp3 = spectrum_svdalg(z);
    CHECK(sp3.C.empty());
    CHECK(sp3.L == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(sp3.R == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("spectral_svdalg reconstruction and spectrum invariance") {
    Rng rng(227);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        StarMatrix h = random_self_adjoint(alg_cl101_pos(), n, rng);
        EigenDecomp d = spectral_svdalg(h);
        CHECK(d.recon_residual <= 1e-8 * (1 + h.frobenius()));
        CHECK(d.unitary_residual <= 1e-9);

        SvdAlgSpectrum sp = spectrum_svdalg(h);
        CHECK(sp.L.size() == sp.R.size());
        for (auto& c : sp.C) CHECK(c[1] > 0.0);

        StarMatrix v = random_unitary(alg_cl101_pos(), n, rng);
        SvdAlgSpectrum spc = spectrum_svdalg(mul(v, mul(h, adjoint(v))));
        REQUIRE(spc.C.size() == sp.C.size());
        REQUIRE(spc.L.size() == sp.L.size());
        for (size_t k = 0; k < sp.C.size(); ++k) {
            CHECK(std::abs(spc.C[k][0] - sp.C[k][0]) <= 1e-7);
            CHECK(std::abs(spc.C[k][1] - sp.C[k][1]) <= 1e-7);
        }
        for (size_t k = 0; k < sp.L.size(); ++k) {
            CHECK(std::abs(spc.L[k] - sp.L[k]) <= 1e-7);
            CHECK(std::abs(spc.R[k] - sp.R[k]) <= 1e-7);
        }
    }
}

TEST_CASE("spectral_svdalg additivity over direct sums") {
    Rng rng(229);
    for (int t = 0; t < 10; ++t) {
        StarMatrix a = random_self_adjoint(alg_cl101_pos(), 2, rng);
        StarMatrix b = random_self_adjoint(alg_cl101_pos(), 3, rng);
        SvdAlgSpectrum sa = spectrum_svdalg(a), sb = spectrum_svdalg(b),
                       ss = spectrum_svdalg(direct_sum(a, b));
        std::vector<std::array<double, 2>> cc = sa.C;
        cc.insert(cc.end(), sb.C.begin(), sb.C.end());
        std::sort(cc.begin(), cc.end(), [](auto& x, auto& y) {
            if (x[0] != y[0]) return x[0] > y[0];
            return x[1] > y[1];
        });
        REQUIRE(cc.size() == ss.C.size());
        for (size_t k = 0; k < cc.size(); ++k) {
            CHECK(std::abs(cc[k][0] - ss.C[k][0]) <= 1e-7);
            CHECK(std::abs(cc[k][1] - ss.C[k][1]) <= 1e-7);
        }
        std::vector<double> ll = sa.L;
        ll.insert(ll.end(), sb.L.begin(), sb.L.end());
        ll = sorted_desc(ll);
        REQUIRE(ll.size() == ss.L.size());
        for (size_t k = 0; k < ll.size(); ++k) CHECK(std::abs(ll[k] - ss.L[k]) <= 1e-7);
    }
}

TEST_CASE("takagi core") {
    // S = diag(2,1)
    TakagiCoreResult t1 = takagi_core(complex_mat(2, 2, {2, 0, 0, 1}, {0, 0, 0, 0}));
    CHECK(t1.d == std::vector<double>{2.0, 1.0});

    // S = [[0,1],[1,0]]: Takagi values both 1
    TakagiCoreResult t2 = takagi_core(complex_mat(2, 2, {0, 1, 1, 0}, {0, 0, 0, 0}));
    CHECK(t2.d[0] == doctest::Approx(1.0));
    CHECK(t2.d[1] == doctest::Approx(1.0));

    // S = [[i]]: D = (1), U = e^{i pi/4} up to sign
    TakagiCoreResult t3 = takagi_core(complex_mat(1, 1, {0}, {1}));
    CHECK(t3.d[0] == doctest::Approx(1.0));
    double c = 1.0 / std::sqrt(2.0);
    bool plus = std::abs(t3.u.at(0, 0, 0) - c) < 1e-9 && std::abs(t3.u.at(0, 0, 1) - c) < 1e-9;
    bool minus = std::abs(t3.u.at(0, 0, 0) + c) < 1e-9 && std::abs(t3.u.at(0, 0, 1) + c) < 1e-9;
    CHECK((plus || minus));

    Rng rng(233);
    for (int t = 0; t < 10; ++t) {
        StarMatrix s = random_matrix(alg_complex(), 5, 5, rng);
        s = scale(add(s, transpose_plain(s)), 0.5);
        TakagiCoreResult tc = takagi_core(s);
        StarMatrix dm = complex_from(real_diag(tc.d), StarMatrix(alg_real(), 5, 5));
        CHECK(mdist(mul(tc.u, mul(dm, transpose_plain(tc.u))), s) <= 1e-9 * (1 + s.frobenius()));
        CHECK(mdist(mul(adjoint(tc.u), tc.u), StarMatrix::identity(alg_complex(), 5)) <= 1e-10);
        for (double v : tc.d) CHECK(v >= -1e-12);
        for (size_t k = 0; k + 1 < tc.d.size(); ++k) CHECK(tc.d[k] >= tc.d[k + 1]);
    }
}

TEST_CASE("skew takagi core") {
    // already canonical: the mu and the block come back verbatim; U is some
    // unitary with U D U^T = S (the factor itself is not unique)
    StarMatrix s5 = complex_mat(2, 2, {0, 5, -5, 0}, {0, 0, 0, 0});
    SkewTakagiCoreResult s1 = skew_takagi_core(s5);
    CHECK(s1.mus == std::vector<double>{5.0});
    CHECK(s1.d.at(0, 1, 0) == doctest::Approx(-5.0));
    CHECK(s1.d.at(1, 0, 0) == doctest::Approx(5.0));
    {
        StarMatrix dm = complex_from(s1.d, StarMatrix(alg_real(), 2, 2));
        CHECK(mdist(mul(s1.u, mul(dm, transpose_plain(s1.u))), s5) <= 1e-10);
    }

    StarMatrix z(alg_complex(), 3, 3);
    SkewTakagiCoreResult s0 = skew_takagi_core(z);
    CHECK(s0.mus.empty());
    CHECK(s0.d.frobenius() == 0.0);

    Rng rng(239);
    for (int t = 0; t < 10; ++t) {
        // even dimension keeps random skew matrices away from structural
        // zero singular values, which the Gram oracle resolves only to 1e-8
        StarMatrix s = random_matrix(alg_complex(), 6, 6, rng);
        s = scale(sub(s, transpose_plain(s)), 0.5);
        SkewTakagiCoreResult sc0 = skew_takagi_core(s);
        StarMatrix dm = complex_from(sc0.d, StarMatrix(alg_real(), 6, 6));
        CHECK(mdist(mul(sc0.u, mul(dm, transpose_plain(sc0.u))), s) <= 1e-8 * (1 + s.frobenius()));
        CHECK(mdist(mul(adjoint(sc0.u), sc0.u), StarMatrix::identity(alg_complex(), 6)) <= 1e-9);
        // mus equal the singular values, which pair up for skew matrices
        std::vector<double> sv = gram_singular_values(s);
        std::vector<double> doubled;
        for (double m : sc0.mus) {
            doubled.push_back(m);
            doubled.push_back(m);
        }
        doubled.resize(6, 0.0);
        doubled = sorted_desc(doubled);
        for (int i = 0; i < 6; ++i)
            CHECK(std::abs(doubled[static_cast<size_t>(i)] - sv[static_cast<size_t>(i)]) <= 1e-8);
    }
}

TEST_CASE("spectral_takagi_alg") {
    Rng rng(241);
    // lambda I + B delta reduces to one Takagi call
    StarMatrix b = random_matrix(alg_complex(), 3, 3, rng);
    b = scale(add(b, transpose_plain(b)), 0.5);
    StarMatrix h = mat_join_delta(alg_cl011_pos(),
                                  scale(StarMatrix::identity(alg_complex(), 3), 2.0), b);
    EigenDecomp d = spectral_takagi_alg(h);
    CHECK(d.recon_residual <= 1e-9 * (1 + h.frobenius()));
    for (int i = 0; i < 3; ++i) CHECK(d.D.at(i, i, 0) == doctest::Approx(2.0));
    TakagiCoreResult tb = takagi_core(b);
    for (int i = 0; i < 3; ++i)
        CHECK(d.D.at(i, i, 2) == doctest::Approx(tb.d[static_cast<size_t>(i)]).epsilon(1e-8));

    // distinct standard eigenvalues, zero delta part: U comes from the
    // Hermitian solve alone (no delta correction needed)
    StarMatrix h0 = random_self_adjoint(alg_complex(), 4, rng);
    StarMatrix h2 = embed_base(alg_cl011_pos(), h0);
    EigenDecomp d2 = spectral_takagi_alg(h2);
    CHECK(mat_delta_part(d2.U).frobenius() <= 1e-10);
    CHECK(d2.recon_residual <= 1e-9 * (1 + h2.frobenius()));

    for (int t = 0; t < 10; ++t) {
        StarMatrix hh = random_self_adjoint(alg_cl011_pos(), 6, rng);
        EigenDecomp dd = spectral_takagi_alg(hh);
        CHECK(dd.recon_residual <= 1e-8 * (1 + hh.frobenius()));
        CHECK(dd.unitary_residual <= 1e-9);
        // D entries are lambda + d delta with real lambda and d >= 0
        for (int i = 0; i < 6; ++i) {
            CHECK(std::abs(dd.D.at(i, i, 1)) <= 1e-12);
            CHECK(std::abs(dd.D.at(i, i, 3)) <= 1e-12);
            CHECK(dd.D.at(i, i, 2) >= -1e-12);
        }
    }
}

TEST_CASE("spectral_skewtakagi_alg") {
    // H = S delta with S = [[0,1],[-1,0]]: one block lambda = 0, mu = 1
    StarMatrix s = complex_mat(2, 2, {0, 1, -1, 0}, {0, 0, 0, 0});
    StarMatrix h = mat_join_delta(alg_cl011_neg(), StarMatrix(alg_complex(), 2, 2), s);
    EigenDecomp d = spectral_skewtakagi_alg(h);
    REQUIRE(d.mus.size() == 1);
    CHECK(d.mus[0] == doctest::Approx(1.0));
    CHECK(std::abs(d.D.at(0, 0, 0)) <= 1e-12);
    CHECK(d.recon_residual <= 1e-10);

    // real diagonal input is already canonical
    StarMatrix hd = embed_base(alg_cl011_neg(),
                               complex_mat(2, 2, {3, 0, 0, 1}, {0, 0, 0, 0}));
    EigenDecomp dd = spectral_skewtakagi_alg(hd);
    CHECK(mdist(dd.D, hd) <= 1e-10);
    CHECK(dd.recon_residual <= 1e-10);

    Rng rng(251);
    for (int t = 0; t < 10; ++t) {
        StarMatrix hh = random_self_adjoint(alg_cl011_neg(), 5, rng);
        EigenDecomp dx = spectral_skewtakagi_alg(hh);
        CHECK(dx.recon_residual <= 1e-8 * (1 + hh.frobenius()));
        CHECK(dx.unitary_residual <= 1e-9);
        for (double m : dx.mus) CHECK(m > 0.0);
        // blocks sorted by (lambda desc, mu desc)
        std::vector<std::pair<double, double>> blocks;
        int i = 0;
        while (i < 5) {
            if (i + 1 < 5 && dx.D.at(i + 1, i, 2) != 0.0) {
                blocks.emplace_back(dx.D.at(i, i, 0), dx.D.at(i + 1, i, 2));
                i += 2;
            } else
                ++i;
        }
        for (size_t k = 0; k + 1 < blocks.size(); ++k) {
            CHECK(blocks[k].first >= blocks[k + 1].first - 1e-9);
            if (std::abs(blocks[k].first - blocks[k + 1].first) < 1e-9)
                CHECK(blocks[k].second >= blocks[k + 1].second - 1e-9);
        }
    }
}

TEST_CASE("spectral_quatdual") {
    // H = lambda I + B delta with B = [j] 1x1: block with mu = 1
    StarMatrix h(alg_quatdual(), 1, 1);
    h.at(0, 0, 0) = 2.0;  // lambda = 2
    h.at(0, 0, 6) = 1.0;  // j delta
    EigenDecomp d = spectral_quatdual(h);
    CHECK(d.D.at(0, 0, 0) == doctest::Approx(2.0));
    CHECK(d.D.at(0, 0, 5) == doctest::Approx(1.0));
    CHECK(d.recon_residual <= 1e-12);

    // quaternion-Hermitian with zero delta part reduces to the base solve
    Rng rng(257);
    StarMatrix h0 = random_self_adjoint(alg_quaternion(), 3, rng);
    StarMatrix h2 = embed_base(alg_quatdual(), h0);
    EigenDecomp d2 = spectral_quatdual(h2);
    CHECK(mat_delta_part(d2.D).frobenius() <= 1e-10);
    CHECK(d2.recon_residual <= 1e-9 * (1 + h2.frobenius()));

    for (int t = 0; t < 8; ++t) {
        StarMatrix hh = random_self_adjoint(alg_quatdual(), 4, rng);
        EigenDecomp dd = spectral_quatdual(hh);
        CHECK(dd.recon_residual <= 1e-8 * (1 + hh.frobenius()));
        CHECK(dd.unitary_residual <= 1e-9);
        for (double m : dd.mus) CHECK(m > 0.0);
    }
}

TEST_CASE("spectral_cl101_neg through the iso") {
    StarMatrix z(alg_cl101_neg(), 2, 2);
    EigenDecomp d0 = spectral_cl101_neg(z);
    CHECK(d0.D.frobenius() <= 1e-14);

    Rng rng(263);
    for (int t = 0; t < 10; ++t) {
        StarMatrix h = random_self_adjoint(alg_cl101_neg(), 4, rng);
        std::vector<SvdEigenvalue> eigs, eigs_iso;
        EigenDecomp d = spectral_cl101_neg(h, -1.0, &eigs);
        CHECK(d.recon_residual <= 1e-8 * (1 + h.frobenius()));
        CHECK(d.unitary_residual <= 1e-9);
        // iso transport: the spectrum agrees with the *_1 side
        spectral_svdalg(iso_cl101(h), -1.0, &eigs_iso);
        REQUIRE(eigs.size() == eigs_iso.size());
        for (size_t k = 0; k < eigs.size(); ++k) {
            CHECK(eigs[k].is_dual == eigs_iso[k].is_dual);
            if (eigs[k].is_dual) {
                CHECK(eigs[k].st == doctest::Approx(eigs_iso[k].st));
                CHECK(eigs[k].nst == doctest::Approx(eigs_iso[k].nst));
            }
        }
    }
}

TEST_CASE("non-self-adjoint inputs are rejected") {
    Rng rng(269);
    StarMatrix x = random_matrix(alg_cl101_pos(), 3, 3, rng);
    CHECK_THROWS_AS(spectral_svdalg(x), precondition_error);
    StarMatrix y = random_matrix(alg_cl011_pos(), 3, 3, rng);
    CHECK_THROWS_AS(spectral_takagi_alg(y), precondition_error);
}

TEST_CASE("projectors displaced by delta diagonalise with eigenvalues 0 and 1") {
    // P = w w* for a unit vector with delta tail: self-adjoint, idempotent,
    // and of the displaced form Q + delta (K, K^T)
    Rng rng(271);
    for (int t = 0; t < 5; ++t) {
        StarMatrix h = random_self_adjoint(alg_cl101_pos(), 4, rng);
        EigenDecomp d = spectral_svdalg(h);
        StarMatrix w = d.U.col(0);
        StarMatrix p = mul(w, adjoint(w));
        CHECK(is_self_adjoint(p, 1e-10));
        CHECK(mdist(mul(p, p), p) <= 1e-12);
        // the one-sided eigenvalue multisets are {1, 0, ..., 0}; which left
        // eigenvalue pairs with which right one is not canonical
        SvdAlgSpectrum sp = spectrum_svdalg(p);
        CHECK(sp.C.empty());
        REQUIRE(sp.L.size() == 4);
        CHECK(sp.L[0] == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(sp.R[0] == doctest::Approx(1.0).epsilon(1e-8));
        for (int k = 1; k < 4; ++k) {
            CHECK(std::abs(sp.L[static_cast<size_t>(k)]) <= 1e-8);
            CHECK(std::abs(sp.R[static_cast<size_t>(k)]) <= 1e-8);
        }
    }
}

TEST_CASE("the all-eigenvalues-equal branch returns a multiple of the identity") {
    StarMatrix h = scalar_mul_left(from_real(alg_cl101_pos(), 2.5),
                                   StarMatrix::identity(alg_cl101_pos(), 3));
    std::vector<SvdEigenvalue> eigs;
    EigenDecomp d = spectral_svdalg(h, -1.0, &eigs);
    CHECK(mdist(d.U, StarMatrix::identity(alg_cl101_pos(), 3)) == 0.0);
    for (const SvdEigenvalue& e : eigs) {
        CHECK(!e.is_dual);
        CHECK(e.x == doctest::Approx(2.5));
        CHECK(e.y == doctest::Approx(2.5));
    }
    CHECK(d.recon_residual <= 1e-14);
}

TEST_CASE("empty matrices pass through every spectral path") {
    CHECK(spectral_svdalg(StarMatrix(alg_cl101_pos(), 0, 0)).U.rows() == 0);
    CHECK(spectral_takagi_alg(StarMatrix(alg_cl011_pos(), 0, 0)).U.rows() == 0);
    CHECK(spectral_skewtakagi_alg(StarMatrix(alg_cl011_neg(), 0, 0)).U.rows() == 0);
    CHECK(spectral_quatdual(StarMatrix(alg_quatdual(), 0, 0)).U.rows() == 0);
}
