// Command-line front end: solve the extremal problem, verify the regularity
// bounds, export radial means, run the log-convexity and decay checks, and
// certify polynomial-density conditions. Reports are JSON, profiles are CSV;
// identical invocations produce byte-identical output.
//
// Exit codes: 0 success (all pass flags true), 1 failed verification or
// runtime failure, 2 usage/config error.

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergman/density.hpp"
#include "bergman/extremal.hpp"
#include "bergman/logconvex.hpp"
#include "bergman/poly.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/regularity.hpp"
#include "bergman/serialize.hpp"
#include "bergman/space.hpp"
#include "bergman/weights.hpp"

namespace {

using namespace bergman;

// Print to stdout and optionally write to a file.
void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) write_text_file(out_path, text);
}

Poly load_poly(const std::string& path) { return poly_from_json(read_text_file(path)); }

QuadGrid grid_for(const WeightSpec& spec) {
    return spec.is_plane() ? build_plane_grid(spec) : build_disc_grid(spec);
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("grid needs 0 < rmin <= rmax");
    std::vector<double> g;
    g.reserve(size_t(points));
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < points; ++i)
        g.push_back(lo + (hi - lo) * double(i) / double(points - 1));
    return g;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("grid needs 0 < rmin <= rmax");
    std::vector<double> g;
    g.reserve(size_t(points));
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < points; ++i)
        g.push_back(lo * std::exp(ratio * double(i) / double(points - 1)));
    return g;
}

struct SolverFlags {
    double tol = 1e-8;
    double quad_tol = 1e-11;
    int max_iter = 10000;
    int radial_order = 96;
    int angular_order = 128;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "solver orthogonality-residual target");
        cmd->add_option("--quad-tol", quad_tol, "adaptive integration tolerance");
        cmd->add_option("--max-iter", max_iter, "iteration cap");
        cmd->add_option("--radial-order", radial_order, "tensor-grid radial order");
        cmd->add_option("--angular-order", angular_order, "tensor-grid angular order");
    }
    SolveOptions options() const {
        SolveOptions o;
        o.tol = tol;
        o.quad_tol = quad_tol;
        o.max_iter = max_iter;
        o.radial_order = radial_order;
        o.angular_order = angular_order;
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "extremal: weighted Bergman/Fock extremal problems, bound verification,\n"
        "radial means, log-convexity diagnostics, and density certificates"};
    app.require_subcommand(1);
    int rc = 0;

    // ---------------------------------------------------------------- solve
    struct {
        std::string weight, kernel, out;
        double p = 2.0;
        int degree = 0;
        SolverFlags flags;
    } so;
    {
        auto* cmd = app.add_subcommand("solve", "solve the extremal problem for a kernel");
        cmd->add_option("--weight", so.weight, "weight string, e.g. fock:alpha=1 or affine:a=2,b=1,R=1")
            ->required();
        cmd->add_option("--p", so.p, "exponent p > 1 (default 2)");
        cmd->add_option("--degree", so.degree, "subspace degree n")->required();
        cmd->add_option("--kernel", so.kernel, "kernel polynomial JSON file")->required();
        cmd->add_option("--out", so.out, "also write the solution JSON here");
        so.flags.attach(cmd);
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(so.weight);
            const Exponents e(so.p);
            const QuadGrid grid = grid_for(spec);
            const Poly k = load_poly(so.kernel);
            const ExtremalSolution sol = solve(k, so.degree, e, spec, grid, so.flags.options());
            emit(solution_to_json(sol, so.p, format_weight(spec)), so.out);
            rc = sol.converged ? 0 : 1;
        });
    }

    // --------------------------------------------------------------- verify
    auto* ver = app.add_subcommand("verify", "verify a bound or identity; emits a report array");
    ver->require_subcommand(1);
    struct {
        std::string weight, f, out;
        double p = 2.0;
        double tol = 1e-8;
        double quad_tol = 1e-11;
    } vb;
    {
        auto* cmd = ver->add_subcommand("base-identity",
                                        "boundary identity on a disc for a given polynomial");
        cmd->add_option("--weight", vb.weight, "disc weight string")->required();
        cmd->add_option("--p", vb.p, "exponent p > 1");
        cmd->add_option("--f", vb.f, "polynomial JSON file")->required();
        cmd->add_option("--tol", vb.tol, "relative tolerance");
        cmd->add_option("--quad-tol", vb.quad_tol, "integration tolerance");
        cmd->add_option("--out", vb.out, "also write the report JSON here");
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(vb.weight);
            const Exponents e(vb.p);
            const BoundReport rep = verify_base_identity(load_poly(vb.f), e, spec, vb.tol, vb.quad_tol);
            emit(bound_reports_to_json({rep}), vb.out);
            rc = rep.pass ? 0 : 1;
        });
    }
    struct {
        std::string weight, kernel, out;
        double p = 2.0;
        double tol = 1e-6;
        int degree = 8;
        SolverFlags flags;
    } vd, vp;
    auto add_bound_cmd = [&](CLI::App* parent, const char* name, const char* help, auto& cfg,
                             bool plane) {
        auto* cmd = parent->add_subcommand(name, help);
        cmd->add_option("--weight", cfg.weight, "weight string")->required();
        cmd->add_option("--p", cfg.p, "exponent p > 1");
        cmd->add_option("--kernel", cfg.kernel, "kernel polynomial JSON file")->required();
        cmd->add_option("--degree", cfg.degree, "subspace degree n (default 8)");
        cmd->add_option("--bound-tol", cfg.tol, "acceptance tolerance for lhs <= rhs");
        cmd->add_option("--out", cfg.out, "also write the report JSON here");
        cfg.flags.attach(cmd);
        cmd->callback([&cfg, &rc, plane] {
            const WeightSpec spec = parse_weight(cfg.weight);
            const Exponents e(cfg.p);
            const QuadGrid grid = grid_for(spec);
            const Poly k = load_poly(cfg.kernel);
            const BoundReport rep =
                plane ? verify_plane_bound(k, e, spec, grid, cfg.degree, cfg.tol, cfg.flags.options())
                      : verify_disc_bound(k, e, spec, grid, cfg.degree, cfg.tol, cfg.flags.options());
            emit(bound_reports_to_json({rep}), cfg.out);
            rc = rep.pass ? 0 : 1;
        });
    };
    add_bound_cmd(ver, "disc", "boundary-term bound for the extremal function on a disc", vd, false);
    add_bound_cmd(ver, "plane", "derivative-term bound for the extremal function on the plane", vp,
                  true);

    // ---------------------------------------------------------------- means
    struct {
        std::string weight, f, out;
        double p = 2.0;
        double rmin = 0.0, rmax = 0.0;  // 0 = auto
        int points = 25;
        double quad_tol = 1e-10;
    } me;
    {
        auto* cmd = app.add_subcommand("means", "radial means profile CSV (r,Mp,Dp,Np)");
        cmd->add_option("--weight", me.weight, "weight string")->required();
        cmd->add_option("--p", me.p, "exponent p > 1");
        cmd->add_option("--f", me.f, "polynomial JSON file")->required();
        cmd->add_option("--rmin", me.rmin, "smallest radius (default rmax/50)");
        cmd->add_option("--rmax", me.rmax, "largest radius (default R on a disc, 4 on the plane)");
        cmd->add_option("--points", me.points, "number of radii (default 25)");
        cmd->add_option("--quad-tol", me.quad_tol, "integration tolerance");
        cmd->add_option("--out", me.out, "also write the CSV here");
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(me.weight);
            const Exponents e(me.p);
            const double rmax = me.rmax > 0.0 ? me.rmax : (spec.is_plane() ? 4.0 : spec.radius());
            const double rmin = me.rmin > 0.0 ? me.rmin : rmax / 50.0;
            const auto rows =
                means_profile(load_poly(me.f), e.p, spec, linear_grid(rmin, rmax, me.points),
                              me.quad_tol);
            emit(means_to_csv(rows), me.out);
            rc = 0;
        });
    }

    // ------------------------------------------------------------ logconvex
    auto* lc = app.add_subcommand("logconvex", "log-convexity and decay diagnostics");
    lc->require_subcommand(1);
    struct {
        std::string weight, out;
        std::vector<double> x0{1.0};
        double tol = 1e-10;
    } ls;
    {
        auto* cmd = lc->add_subcommand("s-integral",
                                       "tail integral S(x0) of the growth gauge; CSV (x0,S)");
        cmd->add_option("--weight", ls.weight, "plane weight string")->required();
        cmd->add_option("--x0", ls.x0, "lower endpoints (repeatable)")->delimiter(',');
        cmd->add_option("--tol", ls.tol, "integration tolerance");
        cmd->add_option("--out", ls.out, "also write the CSV here");
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(ls.weight);
            const GrowthGauge g = gauge_of(spec);
            std::vector<std::pair<double, double>> rows;
            rows.reserve(ls.x0.size());
            for (double x0 : ls.x0) rows.emplace_back(x0, s_integral(g, x0, ls.tol));
            emit(two_column_csv("x0", "S", rows), ls.out);
            rc = 0;
        });
    }
    struct {
        std::string weight, f, out, csv;
        double p = 2.0;
        double rmin = 0.25, rmax = 8.0;
        int points = 48;
        double quad_tol = 1e-10;
    } ld;
    {
        auto* cmd = lc->add_subcommand("decay", "decay certificate for g(r) = r^3 M_p^p w(r^2)");
        cmd->add_option("--weight", ld.weight, "plane weight string")->required();
        cmd->add_option("--f", ld.f, "polynomial JSON file")->required();
        cmd->add_option("--p", ld.p, "exponent p >= 1");
        cmd->add_option("--rmin", ld.rmin, "smallest radius");
        cmd->add_option("--rmax", ld.rmax, "largest radius");
        cmd->add_option("--points", ld.points, "number of radii");
        cmd->add_option("--quad-tol", ld.quad_tol, "integration tolerance");
        cmd->add_option("--out", ld.out, "also write the report JSON here");
        cmd->add_option("--csv", ld.csv, "also write the (r,g) profile CSV here");
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(ld.weight);
            const QuadGrid grid = grid_for(spec);
            const DecayReport rep =
                decay_check(load_poly(ld.f), ld.p, spec, grid,
                            geometric_grid(ld.rmin, ld.rmax, ld.points), ld.quad_tol);
            emit(decay_to_json(rep), ld.out);
            if (!ld.csv.empty()) write_text_file(ld.csv, two_column_csv("r", "g", rep.rows));
            rc = rep.pass ? 0 : 1;
        });
    }
    struct {
        std::string f, out;
        double p = 2.0;
        double rmin = 0.25, rmax = 4.0;
        int points = 33;
        double slack = 1e-8;
        double tol = 1e-12;
    } lx;
    {
        auto* cmd = lc->add_subcommand("convexity",
                                       "log-convexity of M_p(r) and r^3 M_p^p in log r");
        cmd->add_option("--f", lx.f, "polynomial JSON file")->required();
        cmd->add_option("--p", lx.p, "exponent p > 0");
        cmd->add_option("--rmin", lx.rmin, "smallest radius");
        cmd->add_option("--rmax", lx.rmax, "largest radius");
        cmd->add_option("--points", lx.points, "number of radii");
        cmd->add_option("--slack", lx.slack, "second-difference tolerance");
        cmd->add_option("--tol", lx.tol, "integration tolerance");
        cmd->add_option("--out", lx.out, "also write the report JSON here");
        cmd->callback([&] {
            const ConvexityReport rep = logconvexity_check(
                load_poly(lx.f), lx.p, geometric_grid(lx.rmin, lx.rmax, lx.points), lx.slack, lx.tol);
            emit(convexity_to_json(rep), lx.out);
            rc = rep.pass ? 0 : 1;
        });
    }
    struct {
        std::string out;
        std::vector<double> x{10.0, 20.0, 40.0, 80.0};
    } lg;
    {
        auto* cmd = lc->add_subcommand("gamma",
                                       "incomplete-gamma ratio against its asymptote");
        cmd->add_option("--x", lg.x, "evaluation points (repeatable)")->delimiter(',');
        cmd->add_option("--out", lg.out, "also write the report JSON here");
        cmd->callback([&] {
            const GammaReport rep = gamma_ratio_check(lg.x);
            emit(gamma_to_json(rep), lg.out);
            rc = rep.pass ? 0 : 1;
        });
    }

    // -------------------------------------------------------------- density
    auto* de = app.add_subcommand("density", "polynomial-density certificates");
    de->require_subcommand(1);
    struct {
        std::string weight, out;
        double p = 2.0;
        double rho = 0.5, beta = 0.75;
        double tol = 1e-8;
    } dc;
    {
        auto* cmd = de->add_subcommand("check", "integrability conditions for a weight");
        cmd->add_option("--weight", dc.weight, "weight string")->required();
        cmd->add_option("--p", dc.p, "exponent p > 1");
        cmd->add_option("--rho", dc.rho, "dilation parameter in (0,1)");
        cmd->add_option("--beta", dc.beta, "interpolation parameter in (0,1)");
        cmd->add_option("--tol", dc.tol, "tail certification tolerance");
        cmd->add_option("--out", dc.out, "also write the report JSON here");
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(dc.weight);
            const Exponents e(dc.p);
            const DensityReport rep = spec.is_plane()
                                          ? check_plane_density(spec, e, dc.rho, dc.beta, dc.tol)
                                          : disc_density_report(spec, e);
            emit(density_to_json(rep), dc.out);
            rc = rep.finite ? 0 : 1;
        });
    }
    struct {
        std::string out;
        double alpha = 1.0;
        double p = 2.0;
    } df;
    {
        auto* cmd = de->add_subcommand("fock", "certificate for the combined Gaussian profile");
        cmd->add_option("--alpha", df.alpha, "Gaussian rate alpha > 0")->required();
        cmd->add_option("--p", df.p, "exponent p > 1");
        cmd->add_option("--out", df.out, "also write the report JSON here");
        cmd->callback([&] {
            const DensityReport rep = fock_density_certificate(df.alpha, Exponents(df.p));
            emit(density_to_json(rep), df.out);
            rc = rep.finite ? 0 : 1;
        });
    }

    // ---------------------------------------------------------- convergence
    auto* cv = app.add_subcommand("convergence", "subspace and kernel-perturbation studies");
    cv->require_subcommand(1);
    struct {
        std::string weight, kernel, out;
        double p = 2.0;
        std::vector<int> degrees;
        SolverFlags flags;
    } cs;
    {
        auto* cmd = cv->add_subcommand("subspace", "dual norms and gaps across degrees");
        cmd->add_option("--weight", cs.weight, "weight string")->required();
        cmd->add_option("--p", cs.p, "exponent p > 1");
        cmd->add_option("--kernel", cs.kernel, "kernel polynomial JSON file")->required();
        cmd->add_option("--degrees", cs.degrees, "degrees, e.g. 2,4,6,8")
            ->required()
            ->delimiter(',');
        cmd->add_option("--out", cs.out, "also write the rows JSON here");
        cs.flags.attach(cmd);
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(cs.weight);
            const Exponents e(cs.p);
            const QuadGrid grid = grid_for(spec);
            const auto rows = subspace_convergence(load_poly(cs.kernel), e, spec, grid, cs.degrees,
                                                   cs.flags.options());
            emit(convergence_to_json(rows), cs.out);
            rc = 0;
        });
    }
    struct {
        std::string weight, kernel, h, out;
        double p = 2.0;
        int degree = 8;
        std::vector<double> deltas;
        SolverFlags flags;
    } ck;
    {
        auto* cmd = cv->add_subcommand("kernel", "extremal-function distance under kernel shifts");
        cmd->add_option("--weight", ck.weight, "weight string")->required();
        cmd->add_option("--p", ck.p, "exponent p > 1");
        cmd->add_option("--kernel", ck.kernel, "kernel polynomial JSON file")->required();
        cmd->add_option("--perturb", ck.h, "perturbation polynomial JSON file")->required();
        cmd->add_option("--deltas", ck.deltas, "shift sizes, e.g. 0.1,0.01")
            ->required()
            ->delimiter(',');
        cmd->add_option("--degree", ck.degree, "subspace degree n (default 8)");
        cmd->add_option("--out", ck.out, "also write the rows JSON here");
        ck.flags.attach(cmd);
        cmd->callback([&] {
            const WeightSpec spec = parse_weight(ck.weight);
            const Exponents e(ck.p);
            const QuadGrid grid = grid_for(spec);
            const auto rows = kernel_continuity_probe(load_poly(ck.kernel), load_poly(ck.h),
                                                      ck.deltas, e, spec, grid, ck.degree,
                                                      ck.flags.options());
            emit(continuity_to_json(rows), ck.out);
            rc = 0;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return rc;
}
