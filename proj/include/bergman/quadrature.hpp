#pragma once

#include "bergman/weights.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

// Gauss-Legendre nodes/weights on [-1,1], Newton on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Deterministic pairwise summation; fixed reduction order independent of
// threading so reruns are bit-identical.
double pairwise_sum(std::span<const double> v);
cplx pairwise_sum(std::span<const cplx> v);

// Tensor rule for area integrals int_{D} g dA in polar form: radial
// Gauss-Legendre on [0, r_eff] applied to g(r) r dr (the r-jacobian is folded
// into wr), uniform angular grid of size angular_order weighted 2pi/M.
struct QuadGrid {
    std::vector<double> r, wr;  // wr = GL weight * r
    int angular_order = 0;
    double r_eff = 0.0;
    double tail_bound = 0.0;  // certified bound on the omitted tail (plane)
    int max_monomial = 0;     // largest m with int |z|^{2m} w dA covered by tail cert
    bool plane = false;
};

QuadGrid build_disc_grid(const WeightSpec& spec, int radial_order = 64, int angular_order = 64);

// Chooses r_eff by doubling search plus bisection so that the tail
// 2pi int_{r_eff}^inf r^{2m+1} w(r^2) dr is certified below tol for all
// m <= max_monomial. Requires spec.validated(). Throws std::runtime_error when
// the tail never certifies (non-convergent moments).
QuadGrid build_plane_grid(const WeightSpec& spec, double tol = 1e-12, int max_monomial = 16,
                          int radial_order = 0 /*auto*/, int angular_order = 64);

// int |z|^{2m} w(|z|^2) dA over the grid's disc; radial-only sum.
double monomial_moment(const WeightSpec& spec, const QuadGrid& grid, int m);

// Certified integral of g over [r0, inf): dyadic intervals with geometric
// decay certification. finite=false when increments fail to decay.
struct TailCert {
    double value = 0.0;
    double bound = 0.0;  // bound on the remainder past the last interval
    bool finite = false;
    int intervals = 0;
};
TailCert integrate_tail(const std::function<double(double)>& g, double r0, double tol,
                        int max_intervals = 64);

// Smallest dyadically refined R with int_R^inf g(r) dr certified below tol.
// Throws std::runtime_error (single line, mentioning `context`) when no R up
// to ~2^40 certifies.
double certified_tail_radius(const std::function<double(double)>& g, double tol,
                             const std::string& context);

// Scalar adaptive Gauss-Kronrod integration of g over [a, b] with mixed
// absolute/relative tolerance.
double integrate_1d(const std::function<double(double)>& g, double a, double b,
                    double tol = 1e-12);

// Sum of weight*f over all grid nodes z = r_i e^{i theta_j}, pairwise-reduced
// in a fixed order. F maps cplx -> double or cplx.
template <class F>
auto integrate_area(const QuadGrid& grid, F&& f) {
    using R = decltype(f(cplx{}));
    const int M = grid.angular_order;
    const double aw = 2.0 * 3.14159265358979323846 / double(M);
    std::vector<R> per_radius(grid.r.size());
    std::vector<R> ring(static_cast<size_t>(M));
    for (size_t i = 0; i < grid.r.size(); ++i) {
        for (int j = 0; j < M; ++j) {
            const double th = aw * double(j);
            ring[static_cast<size_t>(j)] =
                f(cplx(grid.r[i] * std::cos(th), grid.r[i] * std::sin(th)));
        }
        per_radius[i] = pairwise_sum(std::span<const R>(ring)) * (aw * grid.wr[i]);
    }
    return pairwise_sum(std::span<const R>(per_radius));
}

}  // namespace bergman
