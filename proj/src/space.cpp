#include "bergman/space.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace bergman {

Exponents::Exponents(double p_value) : p(p_value) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("Exponents: p must lie in (1, inf), got " +
                                    std::to_string(p_value));
}

double coeff_scale(const Poly& f) {
    double s = 0.0;
    for (const cplx& a : f.c) s += std::abs(a);
    return s;
}

double plane_truncation_radius(const WeightSpec& spec, double monomial_power, double scale,
                               double tol, RadialWeight rho) {
    if (!spec.is_plane())
        throw std::invalid_argument("plane_truncation_radius: weight " + spec.label() +
                                    " lives on a finite disc");
    const double two_pi = 2.0 * M_PI;
    auto g = [&](double r) {
        const double x = r * r;
        const double density = rho == RadialWeight::w ? spec.w(x) : -x * spec.w_prime(x);
        return scale * two_pi * std::pow(r, monomial_power + 1.0) * density;
    };
    const char* measure = rho == RadialWeight::w ? "w" : "-x w'";
    return certified_tail_radius(g, tol,
                                 "r^" + std::to_string(monomial_power) + " against " + measure +
                                     ", weight " + spec.label());
}

namespace {

// Integration radius for |f|^p-type integrands: the disc radius, or a
// certified plane radius covering the coefficient envelope with margin.
double integration_radius(const Poly& f, double p, const WeightSpec& spec, double tol,
                          RadialWeight rho, double rad_hint) {
    if (!spec.is_plane()) return spec.radius();
    const double cs = std::max(1.0, coeff_scale(f));
    const double scale = 4.0 * std::pow(cs, p);
    const double deg = static_cast<double>(std::max(0, f.degree()));
    const double rad = plane_truncation_radius(spec, deg * p, scale, tol, rho);
    return std::max(rad, rad_hint);
}

}  // namespace

double norm_p(const Poly& f, double p, const WeightSpec& spec, double tol, double rad_hint) {
    if (!(p >= 1.0)) throw std::invalid_argument("norm_p: p must be >= 1");
    if (f.is_zero()) return 0.0;
    const double rad = integration_radius(f, p, spec, tol, RadialWeight::w, rad_hint);
    EngineOptions opt;
    opt.tol = tol;
    const std::vector<cplx> out = integrate_jobs(f, p, spec, rad, {IntegralJob::power()}, opt);
    return std::pow(std::max(0.0, out[0].real()), 1.0 / p);
}

double norm(const Poly& f, const Exponents& e, const WeightSpec& spec, const QuadGrid& grid,
            double tol) {
    return norm_p(f, e.p, spec, tol, grid.plane ? grid.r_eff : 0.0);
}

cplx pairing(const Poly& f, const Poly& k, const WeightSpec& spec, const QuadGrid& grid) {
    const int top = std::min(f.degree(), k.degree());
    cplx acc(0.0, 0.0);
    for (int m = 0; m <= top; ++m)
        acc += f.c[static_cast<size_t>(m)] * std::conj(k.c[static_cast<size_t>(m)]) *
               monomial_moment(spec, grid, m);
    return acc;
}

cplx pairing_quadrature(const Poly& f, const Poly& k, const WeightSpec& spec,
                        const QuadGrid& grid) {
    return integrate_area(grid, [&](cplx z) {
        return f.eval(z) * std::conj(k.eval(z)) * spec.w(std::norm(z));
    });
}

double integral_mean(const Poly& f, double p, double r, double tol) {
    if (!(p > 0.0)) throw std::invalid_argument("integral_mean: p must be > 0");
    if (r < 0.0) throw std::invalid_argument("integral_mean: r must be >= 0");
    if (f.is_zero()) return 0.0;
    if (p == 2.0) {
        std::vector<double> terms(f.c.size());
        double rp = 1.0;
        for (size_t m = 0; m < f.c.size(); ++m) {
            terms[m] = std::norm(f.c[m]) * rp;
            rp *= r * r;
        }
        return std::sqrt(2.0 * M_PI * pairwise_sum(std::span<const double>(terms)));
    }
    return std::pow(angular_power_mean(f, p, r, tol), 1.0 / p);
}

double dp_pow(const Poly& f, double p, const WeightSpec& spec, double r, double tol) {
    if (!(p >= 1.0)) throw std::invalid_argument("dp_pow: p must be >= 1");
    if (f.is_zero()) return 0.0;
    double rad = r;
    if (std::isinf(r)) {
        if (!spec.is_plane())
            throw std::invalid_argument("dp_pow: r = inf needs a plane weight, got " +
                                        spec.label());
        rad = integration_radius(f, p, spec, tol, RadialWeight::minus_xw, 0.0);
    } else if (!(r > 0.0)) {
        return 0.0;
    } else if (!spec.is_plane() && r > spec.radius() * (1.0 + 1e-12)) {
        throw std::invalid_argument("dp_pow: r exceeds the disc radius of " + spec.label());
    }
    EngineOptions opt;
    opt.tol = tol;
    const std::vector<cplx> out =
        integrate_jobs(f, p, spec, rad, {IntegralJob::power(RadialWeight::minus_xw)}, opt);
    return std::max(0.0, out[0].real());
}

double Dp(const Poly& f, const Exponents& e, const WeightSpec& spec, const QuadGrid& grid,
          double r, double tol) {
    if (std::isinf(r) && grid.plane && !f.is_zero()) {
        // Seed from the grid, then let the certified radius enlarge it.
        const double cert = integration_radius(f, e.p, spec, tol, RadialWeight::minus_xw, 0.0);
        const double rr = std::max(grid.r_eff, cert);
        return std::pow(dp_pow(f, e.p, spec, rr, tol), 1.0 / e.p);
    }
    return std::pow(dp_pow(f, e.p, spec, r, tol), 1.0 / e.p);
}

namespace {

double np_value(const Poly& f, double p, const WeightSpec& spec, double r, double tol) {
    if (spec.is_plane()) {
        if (!std::isfinite(r)) throw std::invalid_argument("Np: r must be finite");
    } else if (r > spec.radius() * (1.0 + 1e-12)) {
        throw std::invalid_argument("Np: r exceeds the disc radius of " + spec.label());
    }
    double x = r * r;
    if (!spec.is_plane()) x = std::min(x, spec.radius() * spec.radius());
    return std::pow(r * r / 2.0, 1.0 / p) * std::pow(spec.w(x), 1.0 / p) *
           integral_mean(f, p, r, tol);
}

}  // namespace

double Np(const Poly& f, const Exponents& e, const WeightSpec& spec, double r, double tol) {
    return np_value(f, e.p, spec, r, tol);
}

std::vector<MeansRow> means_profile(const Poly& f, double p, const WeightSpec& spec,
                                    const std::vector<double>& radii, double tol) {
    std::vector<MeansRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        MeansRow row;
        row.r = r;
        row.Mp = integral_mean(f, p, r, tol);
        row.Dp = std::pow(dp_pow(f, p, spec, r, tol), 1.0 / p);
        row.Np = np_value(f, p, spec, r, tol);
        rows.push_back(row);
    }
    return rows;
}

double monomial_norm_pow(const WeightSpec& spec, double p, int m, double tol) {
    if (m < 0) throw std::domain_error("monomial_norm_pow: m must be >= 0");
    if (!(p > 0.0)) throw std::invalid_argument("monomial_norm_pow: p must be > 0");
    const double two_pi = 2.0 * M_PI;
    auto g = [&](double r) { return two_pi * std::pow(r, m * p + 1.0) * spec.w(r * r); };
    double rad;
    if (spec.is_plane()) {
        // Coarse radius fixes the scale; the tail target is then relative.
        const double rough_rad = certified_tail_radius(
            g, 0.5, "monomial norm r^{mp+1} w, weight " + spec.label());
        const double rough = integrate_1d(g, 0.0, rough_rad, 1e-6);
        rad = certified_tail_radius(g, tol * std::max(rough, 1e-300),
                                    "monomial norm r^{mp+1} w, weight " + spec.label());
    } else {
        rad = spec.radius();
    }
    return integrate_1d(g, 0.0, rad, tol);
}

}  // namespace bergman
