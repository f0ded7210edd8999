#pragma once

#include "bergman/extremal.hpp"
#include "bergman/poly.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"
#include "bergman/weights.hpp"

#include <limits>
#include <string>

namespace bergman {

struct BoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs for bounds; |rhs - lhs| for the identity
    bool pass = false;
    double tol = 0.0;
    std::string context;
    // Solver diagnostics (NaN/defaults when no solve was involved).
    double dual_norm = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
    bool solver_converged = true;
};

// Boundary identity on a finite disc: for analytic f,
//   (R^2/2) w(R^2) int |f(R e^{i t})|^p dt + D_p^p(R, f)
//     = Re int ((p/2) z f' + f) |f|^{p-1} conj(sgn f) w dA.
// pass iff |lhs - rhs| (complex defect) < tol (1 + |lhs|).
BoundReport verify_base_identity(const Poly& f, const Exponents& e, const WeightSpec& spec,
                                 double tol = 1e-8, double quad_tol = 1e-11);

// Disc growth bound: solve for the degree-n extremal function f of k, then
//   (R^2/2) w(R^2) M_p^p(R, f) + D_p^p(R, f)
//     <= (2^{1/q} p_hat / dual) [N_q(R, k) + D_q(R, k)]^q.
BoundReport verify_disc_bound(const Poly& k, const Exponents& e, const WeightSpec& spec,
                              const QuadGrid& grid, int n, double tol = 1e-6,
                              const SolveOptions& opts = {});

// Plane growth bound: D_p(inf, f) <= [p_hat D_q(inf, k) / dual]^{1/(p-1)}.
BoundReport verify_plane_bound(const Poly& k, const Exponents& e, const WeightSpec& spec,
                               const QuadGrid& grid, int n, double tol = 1e-6,
                               const SolveOptions& opts = {});

}  // namespace bergman
