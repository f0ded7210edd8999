#pragma once

#include "bergman/p_integrals.hpp"
#include "bergman/poly.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

#include <vector>

namespace bergman {

// Conjugate-exponent bundle for the extremal theory. p must lie in (1, inf);
// q and p_hat are derived on demand so 1/p + 1/q = 1 holds exactly.
struct Exponents {
    double p;
    explicit Exponents(double p_value);
    double q() const { return p / (p - 1.0); }
    double p_hat() const { return p - 1.0 > 1.0 ? p - 1.0 : 1.0; }
};

// Sum of coefficient magnitudes: |f(z)| <= coeff_scale(f) * max(1, |z|)^deg f.
double coeff_scale(const Poly& f);

// Radius beyond which the tail of the plane integral of
// scale * r^{monomial_power} against the selected radial measure
// (w: 2 pi r w(r^2) dr, minus_xw: 2 pi r^3 (-w'(r^2)) dr) is certified
// below tol. Throws std::runtime_error when no radius certifies.
double plane_truncation_radius(const WeightSpec& spec, double monomial_power, double scale,
                               double tol, RadialWeight rho = RadialWeight::w);

// ||f||_p = {int |f|^p w(|z|^2) dA}^{1/p} over the disc (rad = R) or the
// plane (integration radius certified from the coefficient envelope).
// p >= 1; rad_hint enlarges the plane truncation radius if positive.
double norm_p(const Poly& f, double p, const WeightSpec& spec, double tol = 1e-11,
              double rad_hint = 0.0);

// Spec'd entry point: same norm keyed by an Exponents bundle; the grid's
// effective radius seeds the plane truncation.
double norm(const Poly& f, const Exponents& e, const WeightSpec& spec, const QuadGrid& grid,
            double tol = 1e-11);

// Phi_k(f) = int f conj(k) w dA = sum_m a_m conj(b_m) mu_m (radial weights
// make monomials orthogonal). Throws if the grid's certified moment range is
// exceeded.
cplx pairing(const Poly& f, const Poly& k, const WeightSpec& spec, const QuadGrid& grid);

// Same pairing evaluated by tensor quadrature on the grid; cross-check path.
cplx pairing_quadrature(const Poly& f, const Poly& k, const WeightSpec& spec,
                        const QuadGrid& grid);

// M_p(r, f) = {int_0^{2pi} |f(r e^{i theta})|^p dtheta}^{1/p}; no 2 pi
// normalization. p > 0. Closed Parseval form at p = 2.
double integral_mean(const Poly& f, double p, double r, double tol = 1e-12);

// D_p(r, f; w)^p = -int_{|z|<r} |z|^2 |f|^p w'(|z|^2) dA; r may be infinity
// on the plane (truncation radius certified). p >= 1.
double dp_pow(const Poly& f, double p, const WeightSpec& spec, double r, double tol = 1e-11);

// D_p(r, f; w) itself, keyed by Exponents; grid seeds the plane radius.
double Dp(const Poly& f, const Exponents& e, const WeightSpec& spec, const QuadGrid& grid,
          double r, double tol = 1e-11);

// N_p(r, g) = (r^2/2)^{1/p} w(r^2)^{1/p} M_p(r, g); r <= R, with w(R^2) the
// left limit for finite discs.
double Np(const Poly& f, const Exponents& e, const WeightSpec& spec, double r,
          double tol = 1e-12);

struct MeansRow {
    double r;
    double Mp;
    double Dp;
    double Np;
};

// Radial profile of the three means over the given radii (each 0 < r <= R).
std::vector<MeansRow> means_profile(const Poly& f, double p, const WeightSpec& spec,
                                    const std::vector<double>& radii, double tol = 1e-10);

// ||z^m||_p^p = 2 pi int r^{mp+1} w(r^2) dr with certified plane truncation;
// tol is relative.
double monomial_norm_pow(const WeightSpec& spec, double p, int m, double tol = 1e-12);

}  // namespace bergman
