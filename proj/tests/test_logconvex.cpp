#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bergman/logconvex.hpp"
#include "common.hpp"

using namespace bergman;

namespace {
Poly monomial(int m) {
    Poly f;
    f.c.assign(size_t(m) + 1, cplx(0, 0));
    f.c[size_t(m)] = cplx(1, 0);
    return f;
}

GrowthGauge gaussian_gauge() {
    GrowthGauge g;
    g.log_lambda = [](double x) { return x * x; };
    g.dlog_lambda = [](double x) { return 2.0 * x; };
    g.label = "exp(x^2)";
    return g;
}

std::vector<double> geometric(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
    return v;
}
}  // namespace

TEST_CASE("tail comparison integral: Gaussian gauge closed form") {
    // For lambda = e^{x^2}, x0 = 1 the integral is
    // e * (e^{-1}/2 + (sqrt(pi)/4) erfc(1)).
    const double want = std::exp(1.0) * (std::exp(-1.0) / 2.0 +
                                         std::sqrt(M_PI) / 4.0 * std::erfc(1.0));
    const double got = s_integral(gaussian_gauge(), 1.0);
    CHECK(got == doctest::Approx(want).epsilon(1e-6));
    CHECK(want == doctest::Approx(0.689468).epsilon(1e-5));
}

TEST_CASE("tail comparison integral diverges for linear growth") {
    GrowthGauge lin;
    lin.log_lambda = [](double x) { return std::log(x); };
    lin.dlog_lambda = [](double x) { return 1.0 / x; };
    lin.label = "x";
    CHECK(std::isinf(s_integral(lin, 1.0)));
}

TEST_CASE("tail comparison integral ignores gauge rescaling") {
    const GrowthGauge g = gaussian_gauge();
    const GrowthGauge g5 = scale_gauge(g, 5.0);
    for (double x0 : {1.0, 2.5, 7.0}) {
        const double a = s_integral(g, x0);
        const double b = s_integral(g5, x0);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
    CHECK_THROWS_AS((void)scale_gauge(g, 0.0), std::invalid_argument);
}

TEST_CASE("gauge of a plane weight") {
    WeightSpec f2 = testutil::fock(2.0);
    const GrowthGauge g = gauge_of(f2);
    CHECK(g.log_lambda(3.0) == doctest::Approx(18.0).epsilon(1e-13));
    CHECK(g.dlog_lambda(3.0) == doctest::Approx(12.0).epsilon(1e-13));
    WeightSpec a = testutil::affine21();
    CHECK_THROWS_AS((void)gauge_of(a), std::invalid_argument);
}

TEST_CASE("liminf probe stays positive for the Gaussian gauge") {
    WeightSpec f1 = testutil::fock(1.0);
    const auto grid = geometric(1.0, 10.0, 25);
    const LiminfReport rep = liminf_probe(gauge_of(f1), grid);
    REQUIRE(rep.rows.size() == grid.size());
    CHECK(rep.positive);
    CHECK(rep.liminf_estimate > 0.5);
    for (const auto& [x0, s] : rep.rows) {
        CHECK(x0 > 0.0);
        CHECK(s > 0.0);
    }
}

TEST_CASE("upper incomplete gamma: closed forms and recurrence") {
    for (double x : {0.5, 1.0, 3.0}) {
        CHECK(upper_incomplete_gamma(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
        CHECK(upper_incomplete_gamma(2.0, x) ==
              doctest::Approx((1.0 + x) * std::exp(-x)).epsilon(1e-12));
        CHECK(upper_incomplete_gamma(0.5, x) ==
              doctest::Approx(std::sqrt(M_PI) * std::erfc(std::sqrt(x))).epsilon(1e-9));
        const double a = 2.5;
        CHECK(upper_incomplete_gamma(a + 1.0, x) ==
              doctest::Approx(a * upper_incomplete_gamma(a, x) +
                              std::pow(x, a) * std::exp(-x))
                  .epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)upper_incomplete_gamma(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)upper_incomplete_gamma(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("gamma ratio approaches its asymptote from below") {
    const GammaReport rep = gamma_ratio_check({10.0, 20.0, 40.0, 80.0});
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.increasing);
    CHECK(rep.in_range);
    CHECK(rep.pass);
    CHECK(rep.rows[0].ratio == doctest::Approx(0.92352092).epsilon(1e-6));
    CHECK(rep.rows[1].ratio == doctest::Approx(0.94444119).epsilon(1e-6));
    for (const GammaRow& row : rep.rows) {
        CHECK(row.ratio > 0.9);
        CHECK(row.ratio < 1.0);
    }
}

TEST_CASE("decay of the boundary profile for plane monomials") {
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1);
    const auto radii = geometric(0.25, 8.0, 48);
    for (int n : {0, 1, 3}) {
        for (double p : {1.0, 2.0, 3.0}) {
            const DecayReport rep = decay_check(monomial(n), p, f1, g, radii);
            CHECK(rep.dp_finite);
            CHECK(rep.liminf_positive);
            CHECK(rep.ratio_positive);
            CHECK(rep.tail_monotone);
            CHECK(rep.final_small);
            CHECK(rep.pass);
            CHECK(rep.final_value < 1e-6 * rep.peak);
        }
    }
    // g(r) = r^3 * 2 pi r^{np} e^{-r^2} with n = 1, p = 2: frozen value at r = 8.
    const DecayReport rep = decay_check(monomial(1), 2.0, f1, g, radii);
    const double want = 2.0 * M_PI * std::pow(8.0, 5.0) * std::exp(-64.0);
    CHECK(rep.final_value / want == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("decay check: trivial and rejected inputs") {
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1);
    const auto radii = geometric(0.5, 4.0, 16);
    const DecayReport zero = decay_check(Poly{}, 2.0, f1, g, radii);
    CHECK(zero.pass);
    WeightSpec a = testutil::affine21();
    QuadGrid gd = build_disc_grid(a);
    CHECK_THROWS_AS((void)decay_check(monomial(1), 2.0, a, gd, radii), std::invalid_argument);
    CHECK_THROWS_AS((void)decay_check(monomial(1), 0.5, f1, g, radii), std::invalid_argument);
}

TEST_CASE("decay check reports an infinite derivative mean as a hypothesis failure") {
    // w(x) = (1 + x)^{-6} decays fast enough to validate but slowly enough
    // that D_2(inf, z^5) has a divergent tail (integrand ~ 1/r).
    WeightSpec slow = WeightSpec::custom(
        [](double x) { return std::pow(1.0 + x, -6.0); },
        [](double x) { return -6.0 * std::pow(1.0 + x, -7.0); },
        std::numeric_limits<double>::infinity(), std::numeric_limits<double>::quiet_NaN(),
        "inverse-sixth");
    REQUIRE(slow.validate().valid);
    QuadGrid g = build_plane_grid(slow, 1e-10, 1);
    const auto radii = geometric(0.5, 4.0, 16);
    const DecayReport rep = decay_check(monomial(5), 2.0, slow, g, radii);
    CHECK(!rep.dp_finite);
    CHECK(!rep.pass);
}

TEST_CASE("log-convexity of circle means in log r") {
    const auto radii = geometric(0.25, 4.0, 33);
    for (double p : {1.5, 2.0, 3.0}) {
        const ConvexityReport rep = logconvexity_check(Poly{{cplx(1, 0), cplx(1, 0)}}, p, radii);
        CHECK(rep.pass);
        CHECK(rep.min_second_diff_mean >= -1e-8);
        CHECK(rep.min_second_diff_g >= -1e-8);
    }
    // Monomials make log M_p exactly affine in log r: second differences ~ 0.
    const ConvexityReport mono = logconvexity_check(monomial(2), 2.0, radii);
    CHECK(mono.pass);
    CHECK(std::abs(mono.min_second_diff_mean) < 1e-10);
    CHECK(logconvexity_check(Poly{}, 2.0, radii).pass);
    CHECK_THROWS_AS((void)logconvexity_check(monomial(1), 0.0, radii),
                    std::invalid_argument);
}
