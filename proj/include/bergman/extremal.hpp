#pragma once

#include "bergman/poly.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"
#include "bergman/weights.hpp"

#include <limits>
#include <string>
#include <vector>

namespace bergman {

struct SolveOptions {
    double tol = 1e-8;        // orthogonality-residual target
    double quad_tol = 1e-11;  // adaptive integration tolerance
    int max_iter = 10000;
    int radial_order = 96;    // tensor grid (warm-up sweeps and Hessians)
    int angular_order = 128;
    // Optional custom start (monomial coefficients, degree <= n); empty means
    // start from the p = 2 closed form.
    std::vector<cplx> init_coeffs;
};

struct ExtremalSolution {
    Poly f;                  // unit-norm extremal candidate
    double dual_norm = 0.0;  // achieved value Re Phi_k(f)
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
    int degree = -1;
    std::string message;
};

// p = 2 closed form: monomials are orthogonal under radial weights, so the
// truncated kernel is the unnormalized extremal function. Throws
// std::invalid_argument if the kernel vanishes after truncation to degree n.
ExtremalSolution solve_p2(const Poly& k, int n, const WeightSpec& spec, const QuadGrid& grid);

// Maximize Re Phi_k(f) over ||f||_p = 1, deg f <= n, via the convex program
// min ||g||_p^p on the slice Re Phi_k(g) = 1 (then f = g/||g||, dual = 1/||g||).
// Equality-constrained Newton in weight-orthonormal coordinates; convergence
// is certified by the orthogonality residual, not step size. Deterministic.
ExtremalSolution solve(const Poly& k, int n, const Exponents& e, const WeightSpec& spec,
                       const QuadGrid& grid, const SolveOptions& opts = {});

// Orthogonality defect of a candidate: max over h = z^m (m <= n) of
//   | int h |f|^{p-1} conj(sgn f) w dA - Phi_k(h)/dual | / ||h||_p,
// with dual = Re Phi_k(f) from moments; +inf when dual <= 0. sgn 0 := 0.
double residual(const Poly& f, const Poly& k, const Exponents& e, const WeightSpec& spec,
                const QuadGrid& grid, int n, double quad_tol = 1e-11);

struct ConvergenceRow {
    int degree;
    double dual_norm;
    double gap;  // ||f_n - f_N||_p against the largest requested degree N
};

// Subspace study: solve at each degree in n_list (increasing) and compare to
// the top degree. Rows are solver-order independent; independent solves run
// in parallel (EXTREMAL_THREADS caps the worker count).
std::vector<ConvergenceRow> subspace_convergence(const Poly& k, const Exponents& e,
                                                 const WeightSpec& spec, const QuadGrid& grid,
                                                 const std::vector<int>& n_list,
                                                 const SolveOptions& opts = {});

struct ContinuityRow {
    double delta;
    double distance;  // ||f(k + delta h) - f(k)||_p
};

// Kernel perturbation study: distance of the perturbed extremal function to
// the base one for each delta.
std::vector<ContinuityRow> kernel_continuity_probe(const Poly& k, const Poly& h,
                                                   const std::vector<double>& deltas,
                                                   const Exponents& e, const WeightSpec& spec,
                                                   const QuadGrid& grid, int n,
                                                   const SolveOptions& opts = {});

}  // namespace bergman
