#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bergman/poly.hpp"
#include "bergman/space.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Radial density profile nu(t) = w(t^2), handled through its logarithm so
// rapidly decaying profiles can be combined without underflow.
struct RadialProfile {
    std::function<double(double)> log_nu;  // log nu(t) for t >= 0
    std::string label;
};

// Profile of a weight: log nu(t) = log w(t^2).
RadialProfile profile_of(const WeightSpec& spec);

// Constructive constant C(z) with |f(z)| <= C(z) * ||f||_p for every f in the
// space, from the sub-mean-value argument. On a disc of radius R,
// C = (m_z * pi * r'^2)^{-1/p} with r' = (R - |z|)/2 and m_z the infimum of
// the weight on the disc of radius r' about z. On the plane (decreasing
// weight), C = pi^{1/p} * w((|z|+1)^2)^{-1/p}.
double point_eval_bound(const WeightSpec& spec, cplx z, const Exponents& e);

struct DilationRow {
    double rho = 0.0;
    double distance = 0.0;  // || f - f_rho ||_p
};

// Distances || f - f(rho .) ||_p for each rho in rho_list; they decrease to 0
// as rho increases to 1, witnessing approximation by dilates.
std::vector<DilationRow> dilation_convergence(const Poly& f, const WeightSpec& spec,
                                              const Exponents& e,
                                              const std::vector<double>& rho_list,
                                              double tol = 1e-10);

struct DensityReport {
    std::string condition;  // which criterion was checked
    double I1 = 0.0;        // first integral estimate (+inf when divergent)
    double I2 = 0.0;        // second integral estimate (+inf when divergent)
    double tail1 = 0.0;     // certified tail bound for I1 (diagnostic)
    double tail2 = 0.0;     // certified tail bound for I2 (diagnostic)
    bool finite1 = false;
    bool finite2 = false;
    bool finite = false;  // finite1 && finite2
    double p = 0.0;
    double rho = 0.0;
    double beta = 0.0;
    double alpha = std::numeric_limits<double>::quiet_NaN();  // NaN when not applicable
    std::string notes;
};

// Certify the two integrability conditions that imply polynomial density on
// the plane for the profile nu:
//   I1 = 2*pi * Int_0^inf nu(rho*t + 1)^{-2/p} * nu(t)^{2*beta/p} * t dt
//   I2 = 2*pi * Int_0^inf nu(t + 1)^{-beta}   * nu(t)            * t dt
// finite = true only when both tails certify (doubling increments decaying
// geometrically below tol). Requires rho, beta in (0,1).
DensityReport check_plane_density(const RadialProfile& profile, const Exponents& e,
                                  double rho, double beta, double tol = 1e-8);
DensityReport check_plane_density(const WeightSpec& spec, const Exponents& e,
                                  double rho, double beta, double tol = 1e-8);

// Density certificate for the combined profile (t^2 + 1) e^{-alpha t^2}
// with the canonical parameter choice rho = 0.5, beta = 0.75.
DensityReport fock_density_certificate(double alpha, const Exponents& e);

// On a finite disc the integrability conditions are automatic; returns a
// trivially finite report.
DensityReport disc_density_report(const WeightSpec& spec, const Exponents& e);

// Ratio of ||z^n|| in the space weighted by |z|^2 e^{-alpha |z|^2} to ||z^n||
// in the space weighted by e^{-alpha |z|^2}, computed from the bare radial
// moments; equals ((n*p + 2) / (2*alpha))^{1/p}, unbounded in n.
double closed_graph_ratio(double alpha, int n, double p = 2.0, double tol = 1e-12);

}  // namespace bergman
