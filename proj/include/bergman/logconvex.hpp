#pragma once

#include "bergman/poly.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"
#include "bergman/weights.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bergman {

// Growth gauge lambda evaluated in log form so positive rescalings of lambda
// leave every derived quantity bitwise unchanged.
struct GrowthGauge {
    std::function<double(double)> log_lambda;
    std::function<double(double)> dlog_lambda;  // d/dx log lambda(x)
    std::string label;
};

// Gauge lambda(x) = -1/w'(x^2) of a plane weight (exactly alpha x^2 in log
// form for the Gaussian family). Throws for finite-disc weights.
GrowthGauge gauge_of(const WeightSpec& spec);

// lambda -> c * lambda, c > 0. S is invariant under this.
GrowthGauge scale_gauge(const GrowthGauge& g, double c);

// S(x0, lambda) = int_{x0}^inf (lambda(x0)/lambda(x)) (x/x0)^{x0 l'(x0)/l(x0)} dx,
// evaluated over doubling intervals; returns +inf when the tail fails to
// decay (divergent integral).
double s_integral(const GrowthGauge& g, double x0, double tol = 1e-10);

struct LiminfReport {
    std::vector<std::pair<double, double>> rows;  // (x0, S(x0))
    double liminf_estimate = 0.0;                 // min over the tail half
    bool positive = false;
};

LiminfReport liminf_probe(const GrowthGauge& g, const std::vector<double>& x0_grid,
                          double tol = 1e-10);

// Upper incomplete gamma. Integer a uses the exact Poisson partial sum
// Gamma(a, x) = Gamma(a) e^{-x} sum_{k<a} x^k/k!; non-integer a uses
// log-space quadrature of the defining integral. Requires a > 0, x > 0.
double upper_incomplete_gamma(double a, double x);

struct GammaRow {
    double x;
    double ratio;  // Gamma(x,x) / (x^x e^{-x} x^{-1/2} sqrt(pi/2))
};

struct GammaReport {
    std::vector<GammaRow> rows;
    bool increasing = false;
    bool in_range = false;  // every ratio in (0.9, 1)
    bool pass = false;
};

GammaReport gamma_ratio_check(const std::vector<double>& x_grid);

struct DecayReport {
    // Hypothesis checks.
    bool dp_finite = false;
    double dp_value = 0.0;  // D_p(inf, f)
    bool liminf_positive = false;
    double liminf_value = 0.0;
    bool ratio_positive = false;
    double ratio_c = 0.0;  // tail constant C with -w' >= C w
    // Profile of g(r) = r^3 M_p^p(r, f) w(r^2).
    std::vector<std::pair<double, double>> rows;
    double peak = 0.0;
    double peak_r = 0.0;
    double final_value = 0.0;
    bool tail_monotone = false;
    bool final_small = false;  // final < 1e-6 * peak
    bool pass = false;
    std::string notes;
};

// Decay conclusion g(r) -> 0 under the stated hypotheses (finite
// D_p(inf, f), positive liminf of S, -w' >= C w on the tail). Hypothesis
// failures produce a failed report, not an exception. p >= 1.
DecayReport decay_check(const Poly& f, double p, const WeightSpec& spec, const QuadGrid& grid,
                        const std::vector<double>& r_grid, double quad_tol = 1e-10);

struct ConvexityReport {
    std::vector<double> r;
    std::vector<double> log_mean;          // log M_p(r, f)
    std::vector<double> second_diff_mean;  // nonuniform second differences in X = log r
    std::vector<double> second_diff_g;     // same for log (r^3 M_p^p)
    double min_second_diff_mean = 0.0;
    double min_second_diff_g = 0.0;
    double slack = 0.0;
    bool pass = false;
};

// Log-convexity of M_p(r, f) in log r, and of g(r) = r^3 M_p^p(r, f):
// all second differences must be >= -slack. p > 0.
ConvexityReport logconvexity_check(const Poly& f, double p, const std::vector<double>& r_grid,
                                   double slack = 1e-8, double tol = 1e-12);

}  // namespace bergman
