#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bergman/density.hpp"
#include "bergman/extremal.hpp"
#include "bergman/logconvex.hpp"
#include "bergman/regularity.hpp"
#include "bergman/serialize.hpp"

namespace py = pybind11;
using namespace bergman;

namespace {

Poly poly_of(const std::vector<cplx>& coeffs) {
    Poly f;
    f.c = coeffs;
    return f;
}

QuadGrid grid_for(const WeightSpec& spec) {
    return spec.is_plane() ? build_plane_grid(spec) : build_disc_grid(spec);
}

py::dict solution_dict(const ExtremalSolution& s) {
    py::dict d;
    d["coefficients"] = s.f.c;
    d["dual_norm"] = s.dual_norm;
    d["residual"] = s.residual;
    d["iterations"] = s.iterations;
    d["converged"] = s.converged;
    d["degree"] = s.degree;
    d["message"] = s.message;
    return d;
}

py::dict bound_dict(const BoundReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["slack"] = r.slack;
    d["pass"] = r.pass;
    d["tol"] = r.tol;
    d["context"] = r.context;
    d["dual_norm"] = r.dual_norm;
    d["residual"] = r.residual;
    d["iterations"] = r.iterations;
    d["solver_converged"] = r.solver_converged;
    return d;
}

py::dict density_dict(const DensityReport& r) {
    py::dict d;
    d["condition"] = r.condition;
    d["I1"] = r.I1;
    d["I2"] = r.I2;
    d["finite1"] = r.finite1;
    d["finite2"] = r.finite2;
    d["finite"] = r.finite;
    d["p"] = r.p;
    d["rho"] = r.rho;
    d["beta"] = r.beta;
    d["alpha"] = r.alpha;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Extremal problems, growth bounds, and density certificates in "
              "weighted Bergman and Fock-type spaces";

    m.def(
        "solve",
        [](const std::vector<cplx>& kernel, int degree, double p, const std::string& weight,
           double tol) {
            WeightSpec spec = parse_weight(weight);
            QuadGrid grid = grid_for(spec);
            SolveOptions opts;
            opts.tol = tol;
            return solution_dict(solve(poly_of(kernel), degree, Exponents(p), spec, grid, opts));
        },
        py::arg("kernel"), py::arg("degree"), py::arg("p") = 2.0,
        py::arg("weight") = "fock:alpha=1", py::arg("tol") = 1e-8,
        "Maximize Re <f, kernel> over the unit sphere of the degree-n subspace.");

    m.def(
        "solve_p2",
        [](const std::vector<cplx>& kernel, int degree, const std::string& weight) {
            WeightSpec spec = parse_weight(weight);
            QuadGrid grid = grid_for(spec);
            return solution_dict(solve_p2(poly_of(kernel), degree, spec, grid));
        },
        py::arg("kernel"), py::arg("degree"), py::arg("weight") = "fock:alpha=1",
        "Closed-form solution of the quadratic (p = 2) case.");

    m.def(
        "residual",
        [](const std::vector<cplx>& f, const std::vector<cplx>& kernel, double p,
           const std::string& weight, int degree) {
            WeightSpec spec = parse_weight(weight);
            QuadGrid grid = grid_for(spec);
            return residual(poly_of(f), poly_of(kernel), Exponents(p), spec, grid, degree);
        },
        py::arg("f"), py::arg("kernel"), py::arg("p"), py::arg("weight"), py::arg("degree"),
        "Orthogonality defect of a candidate solution.");

    m.def(
        "norm",
        [](const std::vector<cplx>& f, double p, const std::string& weight) {
            WeightSpec spec = parse_weight(weight);
            return norm_p(poly_of(f), p, spec);
        },
        py::arg("f"), py::arg("p"), py::arg("weight"),
        "||f||_p in the weighted space.");

    m.def(
        "verify_base_identity",
        [](const std::vector<cplx>& f, double p, const std::string& weight, double tol) {
            WeightSpec spec = parse_weight(weight);
            return bound_dict(verify_base_identity(poly_of(f), Exponents(p), spec, tol));
        },
        py::arg("f"), py::arg("p"), py::arg("weight"), py::arg("tol") = 1e-8,
        "Check the boundary identity for an analytic polynomial on a disc weight.");

    m.def(
        "verify_disc_bound",
        [](const std::vector<cplx>& kernel, double p, const std::string& weight, int degree,
           double tol) {
            WeightSpec spec = parse_weight(weight);
            QuadGrid grid = grid_for(spec);
            return bound_dict(verify_disc_bound(poly_of(kernel), Exponents(p), spec, grid,
                                                degree, tol));
        },
        py::arg("kernel"), py::arg("p"), py::arg("weight"), py::arg("degree") = 8,
        py::arg("tol") = 1e-6, "Solve, then check the disc growth bound.");

    m.def(
        "verify_plane_bound",
        [](const std::vector<cplx>& kernel, double p, const std::string& weight, int degree,
           double tol) {
            WeightSpec spec = parse_weight(weight);
            QuadGrid grid = grid_for(spec);
            return bound_dict(verify_plane_bound(poly_of(kernel), Exponents(p), spec, grid,
                                                 degree, tol));
        },
        py::arg("kernel"), py::arg("p"), py::arg("weight"), py::arg("degree") = 8,
        py::arg("tol") = 1e-6, "Solve, then check the plane growth bound.");

    m.def(
        "means_profile",
        [](const std::vector<cplx>& f, double p, const std::string& weight,
           const std::vector<double>& radii) {
            WeightSpec spec = parse_weight(weight);
            py::list rows;
            for (const MeansRow& row : means_profile(poly_of(f), p, spec, radii))
                rows.append(py::make_tuple(row.r, row.Mp, row.Dp, row.Np));
            return rows;
        },
        py::arg("f"), py::arg("p"), py::arg("weight"), py::arg("radii"),
        "Rows (r, Mp, Dp, Np) of the radial means profile.");

    m.def(
        "fock_density_certificate",
        [](double alpha, double p) {
            return density_dict(fock_density_certificate(alpha, Exponents(p)));
        },
        py::arg("alpha"), py::arg("p") = 2.0,
        "Density certificate for the combined Gaussian profile.");

    m.def(
        "check_plane_density",
        [](const std::string& weight, double p, double rho, double beta, double tol) {
            WeightSpec spec = parse_weight(weight);
            return density_dict(check_plane_density(spec, Exponents(p), rho, beta, tol));
        },
        py::arg("weight"), py::arg("p"), py::arg("rho") = 0.5, py::arg("beta") = 0.75,
        py::arg("tol") = 1e-8, "Certify the two plane-density integrability conditions.");

    m.def(
        "s_integral",
        [](const std::string& weight, double x0, double tol) {
            WeightSpec spec = parse_weight(weight);
            return s_integral(gauge_of(spec), x0, tol);
        },
        py::arg("weight"), py::arg("x0"), py::arg("tol") = 1e-10,
        "Tail comparison integral of the weight's growth gauge.");
}
