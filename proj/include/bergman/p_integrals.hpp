#pragma once

#include "bergman/poly.hpp"
#include "bergman/weights.hpp"

#include <vector>

namespace bergman {

// Area integrals whose integrands involve |f|^{p-1} conj(sgn f) or |f|^p for
// non-even p. These are smooth except on the zero set of f, where they have
// |.|^{p-1}-type cusps that stall fixed tensor rules. The engine places the
// radial panel boundaries at the root moduli of f and, for circles passing
// near a root, switches the angular rule from equispaced (exponentially
// accurate for circle-analytic integrands) to adaptive bisection seeded at
// the root arguments. Even integer p has polynomial integrands in (z, conj z)
// and dispatches to an angularly exact tensor rule.

enum class RadialWeight {
    w,        // rho(x) = w(x)
    minus_xw  // rho(x) = -x w'(x), the derivative measure
};

// One requested area integral over |z| < rad. kind selects the integrand:
//   sgn_part:  A(z) |f(z)|^{p-1} conj(sgn f(z)) rho(|z|^2)
//   abs_power: |f(z)|^p rho(|z|^2)              (A ignored)
struct IntegralJob {
    enum class Kind { sgn_part, abs_power };
    Kind kind = Kind::sgn_part;
    Poly A;
    RadialWeight rho = RadialWeight::w;

    static IntegralJob sgn(Poly A, RadialWeight rho = RadialWeight::w) {
        return IntegralJob{Kind::sgn_part, std::move(A), rho};
    }
    static IntegralJob power(RadialWeight rho = RadialWeight::w) {
        return IntegralJob{Kind::abs_power, Poly{}, rho};
    }
};

struct EngineOptions {
    double tol = 1e-10;  // mixed abs/rel target per job
    int min_angular = 32;
    int max_angular = 1 << 14;
    int max_radial_depth = 42;
    int max_angular_depth = 30;
};

// All jobs integrated in one adaptive sweep (shared evaluations of f).
// Results in job order. Requires p >= 1 and rad > 0.
std::vector<cplx> integrate_jobs(const Poly& f, double p, const WeightSpec& spec, double rad,
                                 const std::vector<IntegralJob>& jobs,
                                 const EngineOptions& opt = {});

// Circle integral int_0^{2pi} |f(r e^{i theta})|^p dtheta for p > 0, using the
// same root-aware angular machinery (exact equispaced rule for even p).
double angular_power_mean(const Poly& f, double p, double r, double tol = 1e-12);

}  // namespace bergman
