#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bergman/space.hpp"
#include "common.hpp"

using namespace bergman;

namespace {
Poly monomial(int m) {
    Poly f;
    f.c.assign(size_t(m) + 1, cplx(0, 0));
    f.c[size_t(m)] = cplx(1, 0);
    return f;
}
}  // namespace

TEST_CASE("exponent bundle") {
    CHECK_THROWS_AS(Exponents(1.0), std::invalid_argument);
    CHECK_THROWS_AS(Exponents(0.5), std::invalid_argument);
    CHECK_THROWS_AS(Exponents(std::numeric_limits<double>::infinity()), std::invalid_argument);
    const Exponents e(1.5);
    CHECK(e.q() == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(1.0 / e.p + 1.0 / e.q() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.p_hat() == 1.0);
    CHECK(Exponents(3.0).p_hat() == doctest::Approx(2.0));
}

TEST_CASE("plane monomial norms: factorial closed form") {
    WeightSpec f1 = testutil::fock(1.0);
    for (int n = 0; n <= 6; ++n) {
        const double want2 = std::sqrt(M_PI * std::tgamma(n + 1.0));
        CHECK(norm_p(monomial(n), 2.0, f1) == doctest::Approx(want2).epsilon(1e-10));
    }
    // p = 4: ||z^m||_4^4 = pi (2m)! ; p = 1.5: pi Gamma(0.75 m + 1)
    CHECK(norm_p(monomial(1), 4.0, f1) ==
          doctest::Approx(std::pow(2.0 * M_PI, 0.25)).epsilon(1e-10));
    CHECK(norm_p(monomial(1), 1.5, f1) ==
          doctest::Approx(std::pow(M_PI * std::tgamma(1.75), 1.0 / 1.5)).epsilon(1e-10));
}

TEST_CASE("disc norms and scaling") {
    WeightSpec a = testutil::affine21();
    // ||1||_2^2 = mu_0 = 2 pi (1 - 1/4) = 3 pi/2
    CHECK(norm_p(Poly{{cplx(1, 0)}}, 2.0, a) ==
          doctest::Approx(std::sqrt(1.5 * M_PI)).epsilon(1e-12));
    std::mt19937 rng(5);
    const Poly f = testutil::random_poly(rng, 4);
    const double n1 = norm_p(f, 2.5, a);
    const double n2 = norm_p(f * cplx(0, -3.0), 2.5, a);
    CHECK(n2 == doctest::Approx(3.0 * n1).epsilon(1e-11));
    CHECK(norm_p(Poly{}, 2.5, a) == 0.0);
}

TEST_CASE("norm via grid entry point matches norm_p") {
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1);
    std::mt19937 rng(17);
    const Poly f = testutil::random_poly(rng, 5);
    const Exponents e(3.0);
    CHECK(norm(f, e, f1, g) == doctest::Approx(norm_p(f, 3.0, f1)).epsilon(1e-9));
}

TEST_CASE("pairing: moment form against quadrature form") {
    WeightSpec a = testutil::affine21();
    QuadGrid g = build_disc_grid(a);
    std::mt19937 rng(41);
    for (int t = 0; t < 5; ++t) {
        const Poly f = testutil::random_poly(rng, 5);
        const Poly k = testutil::random_poly(rng, 5);
        const cplx via_moments = pairing(f, k, a, g);
        const cplx via_quad = pairing_quadrature(f, k, a, g);
        CHECK(std::abs(via_moments - via_quad) <= 1e-10 * (1.0 + std::abs(via_moments)));
    }
}

TEST_CASE("pairing Hoelder bound") {
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1);
    std::mt19937 rng(43);
    for (double p : {1.5, 2.0, 3.0}) {
        const Exponents e(p);
        for (int t = 0; t < 5; ++t) {
            const Poly f = testutil::random_poly(rng, 4);
            const Poly k = testutil::random_poly(rng, 4);
            const double lhs = std::abs(pairing(f, k, f1, g));
            const double rhs = norm_p(f, e.p, f1) * norm_p(k, e.q(), f1);
            CHECK(lhs <= rhs * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("integral means") {
    // M_p(r, z^n) = (2 pi)^{1/p} r^n
    for (double p : {1.5, 2.0, 4.0})
        CHECK(integral_mean(monomial(2), p, 0.7) ==
              doctest::Approx(std::pow(2.0 * M_PI, 1.0 / p) * 0.49).epsilon(1e-11));
    // M_2(1, 1+z) = sqrt(4 pi)
    CHECK(integral_mean(Poly{{cplx(1, 0), cplx(1, 0)}}, 2.0, 1.0) ==
          doctest::Approx(std::sqrt(4.0 * M_PI)).epsilon(1e-12));
    CHECK(integral_mean(Poly{}, 2.0, 1.0) == 0.0);
    CHECK_THROWS_AS((void)integral_mean(monomial(1), 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("derivative-measure means") {
    WeightSpec f1 = testutil::fock(1.0);
    // D_2(inf, z^n)^2 = pi (n+1)!
    for (int n = 0; n <= 4; ++n) {
        const double want = M_PI * std::tgamma(n + 2.0);
        CHECK(dp_pow(monomial(n), 2.0, f1, std::numeric_limits<double>::infinity()) ==
              doctest::Approx(want).epsilon(1e-10));
    }
    WeightSpec a = testutil::affine21();
    // affine w' = -1: D_2(1, z)^2 = int_{|z|<1} |z|^4 dA = pi/3
    CHECK(dp_pow(monomial(1), 2.0, a, 1.0) == doctest::Approx(M_PI / 3.0).epsilon(1e-11));
    CHECK(dp_pow(monomial(1), 2.0, a, 0.0) == 0.0);
    CHECK_THROWS_AS((void)dp_pow(monomial(1), 2.0, a, 1.5), std::invalid_argument);
}

TEST_CASE("boundary-weighted mean oracle") {
    WeightSpec a = testutil::affine21();
    // N_2(1, 1) = (1/2 w(1))^{1/2} M_2(1, 1) = sqrt(1/2) sqrt(2 pi) = sqrt(pi)
    CHECK(Np(Poly{{cplx(1, 0)}}, Exponents(2.0), a, 1.0) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("means profile rows are consistent") {
    WeightSpec a = testutil::affine21();
    std::mt19937 rng(53);
    const Poly f = testutil::random_poly(rng, 3);
    const std::vector<double> radii{0.25, 0.5, 0.75, 1.0};
    const auto rows = means_profile(f, 2.0, a, radii);
    REQUIRE(rows.size() == radii.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].r == radii[i]);
        CHECK(rows[i].Mp == doctest::Approx(integral_mean(f, 2.0, radii[i])).epsilon(1e-9));
        CHECK(rows[i].Np ==
              doctest::Approx(Np(f, Exponents(2.0), a, radii[i])).epsilon(1e-9));
        const double dp = dp_pow(f, 2.0, a, radii[i]);
        CHECK(rows[i].Dp == doctest::Approx(std::sqrt(dp)).epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)means_profile(f, 2.0, a, {1.5}), std::invalid_argument);
}

TEST_CASE("monomial norm power matches the general norm") {
    WeightSpec f1 = testutil::fock(1.0);
    for (double p : {1.5, 2.0, 3.0}) {
        for (int m : {0, 2, 5}) {
            const double pw = monomial_norm_pow(f1, p, m);
            CHECK(std::pow(pw, 1.0 / p) == doctest::Approx(norm_p(monomial(m), p, f1)).epsilon(1e-9));
        }
    }
}

TEST_CASE("dilation is a norm contraction") {
    WeightSpec f1 = testutil::fock(1.0);
    std::mt19937 rng(59);
    const Poly f = testutil::random_poly(rng, 5);
    const double base = norm_p(f, 2.5, f1);
    for (double rho : {0.3, 0.7, 0.95})
        CHECK(norm_p(dilate(f, rho), 2.5, f1) <= base * (1.0 + 1e-10));
}
