// Acceptance gate: twelve end-to-end checks, one PASS/FAIL line each.
// Exit status is the number of failed checks. Tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/density.hpp"
#include "bergman/extremal.hpp"
#include "bergman/logconvex.hpp"
#include "bergman/regularity.hpp"
#include "bergman/serialize.hpp"
#include "common.hpp"

using namespace bergman;

namespace {

Poly monomial(int m) {
    Poly f;
    f.c.assign(size_t(m) + 1, cplx(0, 0));
    f.c[size_t(m)] = cplx(1, 0);
    return f;
}

std::vector<double> geometric(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
    return v;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- criteria

Outcome moments_match_factorials() {
    const auto t0 = std::chrono::steady_clock::now();
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1, 1e-12, 20);
    double worst = 0.0;
    for (int m = 0; m <= 20; ++m)
        worst = std::max(worst, rel_err(monomial_moment(f1, g, m),
                                        M_PI * std::tgamma(m + 1.0)));
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = worst < 1e-10 && secs < 1.0;
    o.detail = fmt("max rel err %.2e (tol 1e-10), %.3fs (budget 1s)", worst, secs);
    return o;
}

Outcome norm_ratio_growth() {
    double worst = 0.0;
    for (int n = 0; n <= 15; ++n)
        worst = std::max(worst, rel_err(closed_graph_ratio(1.0, n, 2.0),
                                        std::sqrt(n + 1.0)));
    Outcome o;
    o.pass = worst < 1e-8;
    o.detail = fmt("max rel err %.2e (tol 1e-8) for degrees 0..15", worst);
    return o;
}

Outcome boundary_identity_random() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<WeightSpec> specs{testutil::affine21(), testutil::power2()};
    const std::vector<double> ps{1.5, 2.0, 2.5, 3.0, 4.0};
    std::mt19937 rng(20260816);
    double worst = 0.0;
    int checked = 0, failed = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Poly f = testutil::random_poly(rng, trial % 7);
        for (const WeightSpec& spec : specs) {
            for (double p : ps) {
                const BoundReport rep =
                    verify_base_identity(f, Exponents(p), spec, 1e-8, 1e-10);
                worst = std::max(worst, rep.slack / (1.0 + std::abs(rep.lhs)));
                ++checked;
                if (!rep.pass) ++failed;
            }
        }
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = failed == 0 && secs < 30.0;
    o.detail = fmt("%g/500 defects over 1e-8*(1+|lhs|); worst %.2e; %.1fs (budget 30s)",
                   double(failed), worst, secs);
    (void)checked;
    return o;
}

Outcome solver_certificates() {
    Outcome o;
    o.pass = true;
    std::string first;
    auto fail = [&](const std::string& why) {
        o.pass = false;
        if (first.empty()) first = why;
    };

    // Quadratic case agrees with the closed form.
    const Poly k1{{cplx(1, 0), cplx(1, 0)}};
    for (WeightSpec spec : {testutil::fock(1.0), testutil::affine21()}) {
        QuadGrid g = spec.is_plane() ? build_plane_grid(spec) : build_disc_grid(spec);
        const ExtremalSolution closed = solve_p2(k1, 4, spec, g);
        const ExtremalSolution iter = solve(k1, 4, Exponents(2.0), spec, g);
        if (!iter.converged || iter.residual >= 1e-8) fail("p=2 solve did not certify");
        if (rel_err(iter.dual_norm, closed.dual_norm) > 1e-8)
            fail("p=2 dual mismatch vs closed form");
        for (size_t m = 0; m < std::max(iter.f.c.size(), closed.f.c.size()); ++m) {
            const cplx a = m < iter.f.c.size() ? iter.f.c[m] : cplx(0, 0);
            const cplx b = m < closed.f.c.size() ? closed.f.c[m] : cplx(0, 0);
            if (std::abs(a - b) > 1e-8) fail("p=2 coefficient mismatch vs closed form");
        }
    }

    // Monomial kernels at general exponents hit the rotation-forced solution.
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid gp = build_plane_grid(f1);
    for (double p : {1.5, 3.0, 4.0}) {
        for (int m : {1, 2}) {
            const double norm_m = std::pow(M_PI * std::tgamma(m * p / 2.0 + 1.0), 1.0 / p);
            const double want = M_PI * std::tgamma(m + 1.0) / norm_m;
            const ExtremalSolution s = solve(monomial(m), 4, Exponents(p), f1, gp);
            if (!s.converged || s.residual >= 1e-8)
                fail(fmt("monomial kernel solve p=%g did not certify", p));
            else if (rel_err(s.dual_norm, want) > 1e-8)
                fail(fmt("monomial dual off by %.2e at p=%g", rel_err(s.dual_norm, want), p));
        }
    }

    // Mixed kernels: converged runs always carry a small orthogonality defect.
    WeightSpec a = testutil::affine21();
    QuadGrid gd = build_disc_grid(a);
    const Poly km{{cplx(1, 0), cplx(0.5, 0), cplx(0, 0.25)}};
    for (double p : {1.5, 3.0}) {
        const Exponents e(p);
        const ExtremalSolution s = solve(km, 5, e, a, gd);
        if (!s.converged || s.residual >= 1e-8)
            fail(fmt("mixed kernel solve p=%g did not certify", p));
        else if (residual(s.f, km, e, a, gd, 5) >= 1e-8)
            fail(fmt("recomputed defect too large at p=%g", p));
    }

    o.detail = o.pass ? "residual < 1e-8 on every converged run; duals match oracles to 1e-8"
                      : first;
    return o;
}

Outcome disc_bound_grid() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Poly> kernels{
        Poly{{cplx(1, 0)}},
        Poly{{cplx(0, 0), cplx(1, 0)}},
        Poly{{cplx(1, 0), cplx(1, 0)}},
        Poly{{cplx(1, 0), cplx(1, 0), cplx(1, 0)}},
    };
    int failed = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (WeightSpec spec : {testutil::affine21(), testutil::power2()}) {
        QuadGrid g = build_disc_grid(spec);
        for (double p : {1.5, 2.0, 3.0}) {
            for (const Poly& k : kernels) {
                const BoundReport rep = verify_disc_bound(k, Exponents(p), spec, g, 8, 1e-6);
                if (!rep.pass || !rep.solver_converged) ++failed;
                min_slack = std::min(min_slack, rep.slack / std::max(rep.rhs, 1e-300));
            }
        }
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = failed == 0 && secs < 120.0;
    o.detail = fmt("%g/24 violations; min relative slack %.2e; %.1fs (budget 120s)",
                   double(failed), min_slack, secs);
    return o;
}

Outcome plane_bound_grid() {
    const std::vector<Poly> kernels{
        Poly{{cplx(1, 0)}},
        Poly{{cplx(0, 0), cplx(1, 0)}},
        Poly{{cplx(1, 0), cplx(1, 0)}},
        Poly{{cplx(1, 0), cplx(1, 0), cplx(1, 0)}},
    };
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1);
    int failed = 0;
    for (double p : {1.5, 2.0, 3.0})
        for (const Poly& k : kernels)
            if (const BoundReport rep = verify_plane_bound(k, Exponents(p), f1, g, 8, 1e-6);
                !rep.pass || !rep.solver_converged)
                ++failed;

    // Quadratic case with monomial kernels: the bound is an equality.
    double worst_eq = 0.0;
    for (int m : {0, 1, 2}) {
        const BoundReport rep = verify_plane_bound(monomial(m), Exponents(2.0), f1, g, 6, 1e-6);
        worst_eq = std::max(worst_eq, rel_err(rep.lhs, rep.rhs));
        if (!rep.pass) ++failed;
    }
    Outcome o;
    o.pass = failed == 0 && worst_eq < 1e-6;
    o.detail = fmt("%g violations; worst equality defect %.2e (tol 1e-6)", double(failed),
                   worst_eq);
    return o;
}

Outcome subspace_monotone() {
    WeightSpec a = testutil::affine21();
    QuadGrid g = build_disc_grid(a);
    const Poly k{{cplx(1, 0), cplx(0.6, 0), cplx(0.25, 0)}};
    const std::vector<int> degrees{2, 3, 4, 5, 6, 8};
    const auto rows = subspace_convergence(k, Exponents(3.0), a, g, degrees);
    bool dual_ok = true, gap_ok = true;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i + 1].dual_norm < rows[i].dual_norm - 1e-10) dual_ok = false;
        if (rows[i + 1].gap > rows[i].gap + 1e-10) gap_ok = false;
    }
    Outcome o;
    o.pass = dual_ok && gap_ok && rows.size() == degrees.size();
    o.detail = fmt("dual %.9f -> %.9f non-decreasing within 1e-10; gaps non-increasing: %g",
                   rows.front().dual_norm, rows.back().dual_norm, double(dual_ok && gap_ok));
    return o;
}

Outcome kernel_transform_comparisons() {
    WeightSpec f1 = testutil::fock(1.0);
    std::mt19937 rng(777);
    int failed = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 100; ++trial) {
        const Poly k = testutil::random_poly(rng, 1 + trial % 6);
        const Poly K = k_transform(k);
        const Poly zK = zk_transform(k);
        for (double q : {1.5, 2.0, 3.0}) {
            for (double r : {0.5, 1.0, 2.0}) {
                const double mean_k = integral_mean(k, q, r);
                const double mean_zK = integral_mean(zK, q, r);
                if (mean_zK > r * mean_k * (1.0 + 1e-9) + 1e-12) ++failed;
                worst_margin = std::min(worst_margin, r * mean_k - mean_zK);
                const double dk = dp_pow(k, q, f1, r, 1e-9);
                const double dK = dp_pow(K, q, f1, r, 1e-9);
                if (dK > dk * (1.0 + 1e-9) + 1e-12) ++failed;
            }
        }
    }
    Outcome o;
    o.pass = failed == 0;
    o.detail = fmt("%g/1800 comparisons violated; smallest circle-mean margin %.2e",
                   double(failed), worst_margin);
    return o;
}

Outcome tail_comparison_integral() {
    WeightSpec f1 = testutil::fock(1.0);
    const GrowthGauge g = gauge_of(f1);
    const double S1 = s_integral(g, 1.0);
    const double want = std::exp(1.0) * (std::exp(-1.0) / 2.0 +
                                         std::sqrt(M_PI) / 4.0 * std::erfc(1.0));
    const bool value_ok = std::abs(S1 - want) < 1e-3;

    const GrowthGauge gs = scale_gauge(g, 7.5);
    bool scale_ok = true;
    for (double x0 : {1.0, 3.0})
        if (std::abs(s_integral(gs, x0) - s_integral(g, x0)) >
            1e-12 * std::abs(s_integral(g, x0)))
            scale_ok = false;

    const LiminfReport lim = liminf_probe(g, geometric(1.0, 10.0, 25));
    const bool min_ok = lim.positive && lim.liminf_estimate > 0.5;

    Outcome o;
    o.pass = value_ok && scale_ok && min_ok;
    o.detail = fmt("S(1)=%.6f vs %.6f (tol 1e-3); min over [1,10] = %.3f (> 0.5)", S1, want,
                   lim.liminf_estimate);
    if (!scale_ok) o.detail += "; rescaled gauge drifted past 1e-12";
    return o;
}

Outcome decay_and_convexity() {
    WeightSpec f1 = testutil::fock(1.0);
    QuadGrid g = build_plane_grid(f1);
    const auto decay_radii = geometric(0.25, 8.0, 48);
    const auto convex_radii = geometric(0.25, 4.0, 33);
    int failed = 0;
    double worst_second_diff = std::numeric_limits<double>::infinity();
    double worst_final_ratio = 0.0;
    for (int n = 0; n <= 6; ++n) {
        for (double p : {1.0, 2.0, 3.0}) {
            const DecayReport rep = decay_check(monomial(n), p, f1, g, decay_radii);
            if (!rep.pass || !rep.tail_monotone || !rep.final_small) ++failed;
            worst_final_ratio = std::max(worst_final_ratio, rep.final_value / rep.peak);
            const ConvexityReport cv = logconvexity_check(monomial(n), p, convex_radii, 1e-8);
            if (!cv.pass) ++failed;
            worst_second_diff = std::min(
                worst_second_diff, std::min(cv.min_second_diff_mean, cv.min_second_diff_g));
        }
    }
    Outcome o;
    o.pass = failed == 0;
    o.detail = fmt("%g/21 cases failed; worst final/peak %.1e (tol 1e-6); min 2nd diff %.1e",
                   double(failed), worst_final_ratio, worst_second_diff);
    return o;
}

Outcome gamma_ratio_asymptote() {
    const GammaReport rep = gamma_ratio_check({10.0, 20.0, 40.0, 80.0});
    Outcome o;
    o.pass = rep.pass && rep.increasing && rep.in_range;
    o.detail = fmt("ratios %.6f -> %.6f, increasing inside (0.9, 1)", rep.rows.front().ratio,
                   rep.rows.back().ratio);
    return o;
}

Outcome density_certificates() {
    int failed = 0;
    for (double alpha : {0.1, 1.0, 2.0})
        for (double p : {1.5, 2.0, 3.0})
            if (!fock_density_certificate(alpha, Exponents(p)).finite) ++failed;

    WeightSpec f1 = testutil::fock(1.0);
    const DensityReport counter = check_plane_density(f1, Exponents(2.0), 0.5, 0.2);
    const bool counter_ok = !counter.finite && !counter.finite1;
    Outcome o;
    o.pass = failed == 0 && counter_ok;
    o.detail = fmt("%g/9 certificates missing; counter-parameters divergent: %g",
                   double(failed), double(counter_ok));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"Gaussian-weight radial moments match factorials within 1e-10 (< 1s)",
         moments_match_factorials},
        {"norm ratio between plain and |z|^2-weighted spaces is sqrt(n+1) within 1e-8",
         norm_ratio_growth},
        {"boundary identity holds for 50 random polynomials x 5 exponents x 2 disc weights",
         boundary_identity_random},
        {"extremal solver: residual certificates, quadratic cross-check, monomial duals",
         solver_certificates},
        {"disc growth bound holds over 4 kernels x 3 exponents x 2 weights at degree 8",
         disc_bound_grid},
        {"plane growth bound holds on the same grid; quadratic monomial cases are equalities",
         plane_bound_grid},
        {"subspace duals are non-decreasing and gaps non-increasing for a degree-2 kernel",
         subspace_monotone},
        {"kernel transforms contract circle means (factor r) and derivative means",
         kernel_transform_comparisons},
        {"tail comparison integral: frozen value, gauge-scale invariance, minimum > 0.5",
         tail_comparison_integral},
        {"boundary decay profiles vanish and circle means are log-convex in log r",
         decay_and_convexity},
        {"incomplete-gamma ratio increases toward its asymptote inside (0.9, 1)",
         gamma_ratio_asymptote},
        {"plane density certificates are finite; swapped parameters are caught divergent",
         density_certificates},
    };

    const auto suite_t0 = std::chrono::steady_clock::now();
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& err) {
            o.pass = false;
            o.detail = std::string("exception: ") + err.what();
        }
        const double secs = seconds_since(t0);
        std::printf("%s criterion %zu: %s — %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].label, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    const double total = seconds_since(suite_t0);
    const bool budget_ok = total < 300.0;
    std::printf("%s suite budget: %.1fs of 300s\n", budget_ok ? "PASS" : "FAIL", total);
    if (!budget_ok) ++failures;
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
