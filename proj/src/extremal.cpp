#include "bergman/extremal.hpp"

#include "bergman/p_integrals.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace bergman {

namespace {

int worker_count(size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("EXTREMAL_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(std::min<size_t>(hw, jobs));
}

// Runs fn(i) for i in [0, count) on a small pool; results must be written to
// index-addressed slots so the output is schedule-independent.
void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    const int workers = worker_count(count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next(0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&]() {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

std::vector<cplx> padded_coeffs(const Poly& f, int n) {
    std::vector<cplx> out(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    for (size_t m = 0; m < f.c.size() && m <= static_cast<size_t>(n); ++m) out[m] = f.c[m];
    return out;
}

// Shared problem data for one (k, n, p, weight) instance.
struct Problem {
    const WeightSpec& spec;
    const QuadGrid& grid;
    double p;
    int n;
    std::vector<cplx> b;        // truncated kernel coefficients, size n+1
    std::vector<double> mu;     // monomial moments
    std::vector<double> sqmu;   // sqrt(mu)
    std::vector<double> mono_norm;  // ||z^m||_p
    Eigen::VectorXd kvec;       // constraint normal in real coordinates

    Problem(const Poly& k, int n_, double p_, const WeightSpec& spec_, const QuadGrid& grid_,
            double quad_tol)
        : spec(spec_), grid(grid_), p(p_), n(n_) {
        if (n < 0) throw std::invalid_argument("solve: degree n must be >= 0");
        const Poly kt = truncate(k, n);
        if (kt.is_zero())
            throw std::invalid_argument(
                "solve: kernel vanishes after truncation to degree " + std::to_string(n));
        b = padded_coeffs(kt, n);
        const size_t dim = static_cast<size_t>(n) + 1;
        mu.resize(dim);
        sqmu.resize(dim);
        mono_norm.resize(dim);
        for (int m = 0; m <= n; ++m) {
            mu[static_cast<size_t>(m)] = monomial_moment(spec, grid, m);
            sqmu[static_cast<size_t>(m)] = std::sqrt(mu[static_cast<size_t>(m)]);
            mono_norm[static_cast<size_t>(m)] =
                std::pow(monomial_norm_pow(spec, p, m, std::min(quad_tol, 1e-12)), 1.0 / p);
        }
        kvec.resize(2 * static_cast<int>(dim));
        for (int m = 0; m <= n; ++m) {
            const cplx kappa = b[static_cast<size_t>(m)] * sqmu[static_cast<size_t>(m)];
            kvec[m] = kappa.real();
            kvec[m + n + 1] = kappa.imag();
        }
    }

    Poly poly_from(const Eigen::VectorXd& x) const {
        Poly g;
        g.c.resize(static_cast<size_t>(n) + 1);
        for (int m = 0; m <= n; ++m)
            g.c[static_cast<size_t>(m)] =
                cplx(x[m], x[m + n + 1]) / sqmu[static_cast<size_t>(m)];
        return g;
    }

    // Orthogonality residual from the raw integrals I_m = I_m(g) and
    // ||g||_p^p, using dual = 1/||g||_p on the feasible slice.
    double residual_from(const std::vector<cplx>& I, double phi) const {
        if (!(phi > 0.0)) return std::numeric_limits<double>::infinity();
        const double norm_g = std::pow(phi, 1.0 / p);
        const double down = std::pow(norm_g, p - 1.0);
        double worst = 0.0;
        for (int m = 0; m <= n; ++m) {
            const size_t mm = static_cast<size_t>(m);
            const cplx target = std::conj(b[mm]) * mu[mm] * norm_g;
            const double defect = std::abs(I[mm] / down - target) / mono_norm[mm];
            worst = std::max(worst, defect);
        }
        return worst;
    }
};

// Fixed tensor-product grid used for warm-up iterations and all Hessians.
struct TensorGrid {
    Eigen::VectorXd W;   // node measures including the weight function
    Eigen::MatrixXcd V;  // V(m, i) = phi_m(z_i) in the orthonormal basis
    double rad = 0.0;

    void build(const Problem& pb, double rad_, int radial_order, int angular_order) {
        rad = rad_;
        std::vector<double> gx, gw;
        gauss_legendre(radial_order, gx, gw);
        const int M = angular_order;
        const size_t N = gx.size() * static_cast<size_t>(M);
        W.resize(static_cast<Eigen::Index>(N));
        V.resize(pb.n + 1, static_cast<Eigen::Index>(N));
        size_t idx = 0;
        for (size_t i = 0; i < gx.size(); ++i) {
            const double r = 0.5 * rad * (gx[i] + 1.0);
            const double wr =
                0.5 * rad * gw[i] * r * pb.spec.w(r * r) * (2.0 * M_PI / M);
            for (int j = 0; j < M; ++j, ++idx) {
                const double th = 2.0 * M_PI * j / M;
                const cplx z = std::polar(r, th);
                W[static_cast<Eigen::Index>(idx)] = wr;
                cplx zm(1.0, 0.0);
                for (int m = 0; m <= pb.n; ++m) {
                    V(m, static_cast<Eigen::Index>(idx)) =
                        zm / pb.sqmu[static_cast<size_t>(m)];
                    zm *= z;
                }
            }
        }
    }
};

struct EvalResult {
    double phi = 0.0;
    std::vector<cplx> I;     // raw integrals I_m(g)
    Eigen::VectorXd grad;    // d phi / dx
    double res = std::numeric_limits<double>::infinity();
};

class Solver {
  public:
    Solver(const Poly& k, int n, double p, const WeightSpec& spec, const QuadGrid& grid,
           const SolveOptions& opts)
        : pb_(k, n, p, spec, grid, opts.quad_tol), opts_(opts) {}

    ExtremalSolution run() {
        Eigen::VectorXd x = initial_point();
        tensor_.build(pb_, tensor_radius(x), opts_.radial_order, opts_.angular_order);

        ExtremalSolution sol;
        sol.degree = pb_.n;
        double lam = 0.0;
        bool engine_phase = false;
        const int phase1_cap = std::min(60, std::max(1, opts_.max_iter / 2));
        const double switch_tol = std::max(10.0 * opts_.tol, 1e-7);
        int it = 0;
        std::string stall_note;

        EvalResult ev = engine_phase ? eval_engine(x) : eval_tensor(x);
        while (it < opts_.max_iter) {
            ++it;
            if (engine_phase && ev.res < opts_.tol) {
                sol.converged = true;
                break;
            }
            if (!engine_phase && (ev.res < switch_tol || it > phase1_cap)) {
                engine_phase = true;
                ev = eval_engine(x);
                continue;
            }

            const Eigen::MatrixXd H = tensor_hessian(x);
            bool stepped = false;
            for (int tries = 0; tries < 30 && !stepped; ++tries) {
                const Eigen::VectorXd dx = kkt_step(H, ev.grad, lam);
                const double gd = ev.grad.dot(dx);
                if (!dx.allFinite() || gd >= -1e-18 * (1.0 + std::abs(ev.phi))) {
                    lam = std::max(1e-8, lam * 10.0);
                    if (lam > 1e12) break;
                    continue;
                }
                double t = 1.0;
                for (int h = 0; h < 40; ++h) {
                    Eigen::VectorXd xt = x + t * dx;
                    xt /= xt.dot(pb_.kvec);  // exact feasibility
                    if (engine_phase) {
                        // The slice problem is convex, so the orthogonality
                        // residual vanishes only at the solution; accepting on
                        // a clear residual drop keeps Newton moving once the
                        // O(res^2) objective decrease sinks below quadrature
                        // noise and the Armijo test goes blind.
                        EvalResult et = eval_engine(xt);
                        if (et.phi <= ev.phi + 1e-4 * t * gd || et.res <= 0.99 * ev.res) {
                            x = xt;
                            ev = et;
                            stepped = true;
                            break;
                        }
                    } else if (objective_tensor(xt) <= ev.phi + 1e-4 * t * gd) {
                        x = xt;
                        stepped = true;
                        break;
                    }
                    t *= 0.5;
                }
                if (!stepped) {
                    lam = std::max(1e-8, lam * 10.0);
                    if (lam > 1e12) break;
                }
            }
            if (!stepped) {
                if (!engine_phase) {
                    engine_phase = true;
                    lam = 0.0;
                    ev = eval_engine(x);
                    continue;
                }
                stall_note = "line search stalled";
                break;
            }
            lam *= 0.25;
            if (lam < 1e-14) lam = 0.0;
            if (!engine_phase) ev = eval_tensor(x);  // engine steps carry their eval
        }

        if (!engine_phase) ev = eval_engine(x);  // certify with the adaptive engine
        const double norm_g = std::pow(ev.phi, 1.0 / pb_.p);
        sol.f = pb_.poly_from(x) * cplx(1.0 / norm_g, 0.0);
        sol.dual_norm = 1.0 / norm_g;
        sol.residual = ev.res;
        sol.iterations = it;
        if (ev.res < opts_.tol) sol.converged = true;
        sol.message = sol.converged
                          ? "converged: orthogonality residual below tolerance"
                          : (stall_note.empty() ? "iteration limit reached" : stall_note);
        return sol;
    }

  private:
    Eigen::VectorXd initial_point() const {
        const int dim = 2 * (pb_.n + 1);
        Eigen::VectorXd x(dim);
        if (!opts_.init_coeffs.empty()) {
            for (int m = 0; m <= pb_.n; ++m) {
                const cplx gm = static_cast<size_t>(m) < opts_.init_coeffs.size()
                                    ? opts_.init_coeffs[static_cast<size_t>(m)]
                                    : cplx(0.0, 0.0);
                const cplx cm = gm * pb_.sqmu[static_cast<size_t>(m)];
                x[m] = cm.real();
                x[m + pb_.n + 1] = cm.imag();
            }
            const double s = x.dot(pb_.kvec);
            if (std::abs(s) > 1e-12) return x / s;
        }
        // p = 2 solution scaled onto the constraint slice: g0 = kt / ||kt||^2.
        double dual2sq = 0.0;
        for (int m = 0; m <= pb_.n; ++m)
            dual2sq += std::norm(pb_.b[static_cast<size_t>(m)]) * pb_.mu[static_cast<size_t>(m)];
        for (int m = 0; m <= pb_.n; ++m) {
            const cplx cm =
                pb_.b[static_cast<size_t>(m)] * pb_.sqmu[static_cast<size_t>(m)] / dual2sq;
            x[m] = cm.real();
            x[m + pb_.n + 1] = cm.imag();
        }
        return x;
    }

    // Monotone over a solve: re-deriving the truncation radius from every
    // iterate would shift the radial panel layout between nearby evaluations,
    // turning the systematic quadrature error into noise that the line search
    // then chases. The generous scale factor keeps one early radius valid for
    // the whole run; the ratchet covers iterates that still outgrow it.
    double engine_radius(const Poly& g) const {
        if (!pb_.spec.is_plane()) return pb_.spec.radius();
        const double cs = std::max(1.0, coeff_scale(g));
        const double scale = 64.0 * std::pow(cs, pb_.p);
        const double rad = plane_truncation_radius(pb_.spec, pb_.n * pb_.p, scale,
                                                   opts_.quad_tol, RadialWeight::w);
        engine_rad_ = std::max({engine_rad_, rad, pb_.grid.r_eff});
        return engine_rad_;
    }

    double tensor_radius(const Eigen::VectorXd& x) const {
        return engine_radius(pb_.poly_from(x));
    }

    EvalResult eval_tensor(const Eigen::VectorXd& x) const {
        const int n = pb_.n;
        EvalResult out;
        out.I.assign(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
        out.grad.setZero(2 * (n + 1));
        const Eigen::VectorXcd c = coords(x);
        const Eigen::VectorXcd g = tensor_.V.transpose() * c;
        double phi = 0.0;
        std::vector<cplx> D(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
        for (Eigen::Index i = 0; i < g.size(); ++i) {
            const double a = std::abs(g[i]);
            if (a < 1e-150) continue;
            const double ap2 = std::pow(a, pb_.p - 2.0);
            phi += tensor_.W[i] * ap2 * a * a;
            const cplx fac = tensor_.W[i] * std::conj(g[i]) * ap2;
            for (int m = 0; m <= n; ++m) D[static_cast<size_t>(m)] += tensor_.V(m, i) * fac;
        }
        out.phi = phi;
        for (int m = 0; m <= n; ++m) {
            const cplx Dm = pb_.p * D[static_cast<size_t>(m)];
            out.grad[m] = Dm.real();
            out.grad[m + n + 1] = -Dm.imag();
            out.I[static_cast<size_t>(m)] = Dm * pb_.sqmu[static_cast<size_t>(m)] / pb_.p;
        }
        out.res = pb_.residual_from(out.I, out.phi);
        return out;
    }

    double objective_tensor(const Eigen::VectorXd& x) const {
        const Eigen::VectorXcd g = tensor_.V.transpose() * coords(x);
        double phi = 0.0;
        for (Eigen::Index i = 0; i < g.size(); ++i) {
            const double a = std::abs(g[i]);
            if (a < 1e-150) continue;
            phi += tensor_.W[i] * std::pow(a, pb_.p);
        }
        return phi;
    }

    EvalResult eval_engine(const Eigen::VectorXd& x) const {
        const int n = pb_.n;
        const Poly g = pb_.poly_from(x);
        std::vector<IntegralJob> jobs;
        jobs.reserve(static_cast<size_t>(n) + 2);
        for (int m = 0; m <= n; ++m) {
            Poly zm;
            zm.c.assign(static_cast<size_t>(m) + 1, cplx(0.0, 0.0));
            zm.c.back() = cplx(1.0, 0.0);
            jobs.push_back(IntegralJob::sgn(std::move(zm)));
        }
        jobs.push_back(IntegralJob::power());
        EngineOptions eopt;
        eopt.tol = opts_.quad_tol;
        const std::vector<cplx> vals =
            integrate_jobs(g, pb_.p, pb_.spec, engine_radius(g), jobs, eopt);
        EvalResult out;
        out.I.assign(vals.begin(), vals.begin() + (n + 1));
        out.phi = vals.back().real();
        out.grad.resize(2 * (n + 1));
        for (int m = 0; m <= n; ++m) {
            const cplx Dm = pb_.p * out.I[static_cast<size_t>(m)] /
                            pb_.sqmu[static_cast<size_t>(m)];
            out.grad[m] = Dm.real();
            out.grad[m + n + 1] = -Dm.imag();
        }
        out.res = pb_.residual_from(out.I, out.phi);
        return out;
    }

    Eigen::VectorXcd coords(const Eigen::VectorXd& x) const {
        Eigen::VectorXcd c(pb_.n + 1);
        for (int m = 0; m <= pb_.n; ++m) c[m] = cplx(x[m], x[m + pb_.n + 1]);
        return c;
    }

    Eigen::MatrixXd tensor_hessian(const Eigen::VectorXd& x) const {
        const int n = pb_.n;
        const int dim = 2 * (n + 1);
        const Eigen::VectorXcd c = coords(x);
        const Eigen::VectorXcd g = tensor_.V.transpose() * c;
        const Eigen::Index N = g.size();

        Eigen::VectorXd s(N);
        Eigen::MatrixXd A(dim, N);
        for (Eigen::Index i = 0; i < N; ++i) {
            const double a = std::abs(g[i]);
            if (a < 1e-150) {
                s[i] = 0.0;
                A.col(i).setZero();
                continue;
            }
            s[i] = pb_.p * tensor_.W[i] * std::pow(a, pb_.p - 2.0);
            const cplx ubar = std::conj(g[i]) / a;
            for (int m = 0; m <= n; ++m) {
                const cplx t = tensor_.V(m, i) * ubar;
                A(m, i) = t.real();
                A(m + n + 1, i) = -t.imag();
            }
        }

        const Eigen::MatrixXcd Vs = tensor_.V * s.cwiseSqrt().asDiagonal();
        const Eigen::MatrixXcd P = Vs * Vs.adjoint();
        Eigen::MatrixXd H(dim, dim);
        H.topLeftCorner(n + 1, n + 1) = P.real();
        H.topRightCorner(n + 1, n + 1) = P.imag();
        H.bottomLeftCorner(n + 1, n + 1) = -P.imag();
        H.bottomRightCorner(n + 1, n + 1) = P.real();

        const Eigen::MatrixXd As = A * s.cwiseSqrt().asDiagonal();
        H.noalias() += (pb_.p - 2.0) * (As * As.transpose());
        return 0.5 * (H + H.transpose());  // symmetrize away roundoff
    }

    Eigen::VectorXd kkt_step(const Eigen::MatrixXd& H, const Eigen::VectorXd& grad,
                             double lam) const {
        const int dim = static_cast<int>(grad.size());
        Eigen::MatrixXd K(dim + 1, dim + 1);
        K.setZero();
        K.topLeftCorner(dim, dim) = H;
        K.topLeftCorner(dim, dim).diagonal().array() += lam;
        K.block(0, dim, dim, 1) = pb_.kvec;
        K.block(dim, 0, 1, dim) = pb_.kvec.transpose();
        Eigen::VectorXd rhs(dim + 1);
        rhs.head(dim) = -grad;
        rhs[dim] = 0.0;
        const Eigen::VectorXd sol = K.fullPivLu().solve(rhs);
        return sol.head(dim);
    }

    Problem pb_;
    SolveOptions opts_;
    TensorGrid tensor_;
    mutable double engine_rad_ = 0.0;
};

}  // namespace

ExtremalSolution solve_p2(const Poly& k, int n, const WeightSpec& spec, const QuadGrid& grid) {
    if (n < 0) throw std::invalid_argument("solve_p2: degree n must be >= 0");
    const Poly kt = truncate(k, n);
    if (kt.is_zero())
        throw std::invalid_argument(
            "solve_p2: kernel vanishes after truncation to degree " + std::to_string(n));
    double dual_sq = 0.0;
    for (size_t m = 0; m < kt.c.size(); ++m)
        dual_sq += std::norm(kt.c[m]) * monomial_moment(spec, grid, static_cast<int>(m));
    ExtremalSolution sol;
    sol.degree = n;
    sol.dual_norm = std::sqrt(dual_sq);
    sol.f = kt * cplx(1.0 / sol.dual_norm, 0.0);
    sol.iterations = 0;
    sol.residual = residual(sol.f, k, Exponents(2.0), spec, grid, n);
    sol.converged = true;
    sol.message = "closed form (p = 2 truncation)";
    return sol;
}

ExtremalSolution solve(const Poly& k, int n, const Exponents& e, const WeightSpec& spec,
                       const QuadGrid& grid, const SolveOptions& opts) {
    Solver solver(k, n, e.p, spec, grid, opts);
    return solver.run();
}

double residual(const Poly& f, const Poly& k, const Exponents& e, const WeightSpec& spec,
                const QuadGrid& grid, int n, double quad_tol) {
    if (n < 0) throw std::invalid_argument("residual: degree n must be >= 0");
    if (f.is_zero()) return std::numeric_limits<double>::infinity();
    const double p = e.p;
    const Poly kt = truncate(k, n);
    const std::vector<cplx> b = padded_coeffs(kt, n);

    cplx phi_f(0.0, 0.0);
    for (int m = 0; m <= n; ++m) {
        const cplx fm = static_cast<size_t>(m) < f.c.size() ? f.c[static_cast<size_t>(m)]
                                                            : cplx(0.0, 0.0);
        if (b[static_cast<size_t>(m)] == cplx(0.0, 0.0) || fm == cplx(0.0, 0.0)) continue;
        phi_f += fm * std::conj(b[static_cast<size_t>(m)]) * monomial_moment(spec, grid, m);
    }
    const double dual = phi_f.real();
    if (!(dual > 0.0)) return std::numeric_limits<double>::infinity();

    double rad = spec.is_plane() ? 0.0 : spec.radius();
    if (spec.is_plane()) {
        const double cs = std::max(1.0, coeff_scale(f));
        const double scale = 4.0 * std::pow(cs, p - 1.0);
        const double deg = static_cast<double>(std::max(0, f.degree()));
        rad = std::max(grid.r_eff, plane_truncation_radius(spec, n + deg * (p - 1.0), scale,
                                                           quad_tol, RadialWeight::w));
    }
    std::vector<IntegralJob> jobs;
    for (int m = 0; m <= n; ++m) {
        Poly zm;
        zm.c.assign(static_cast<size_t>(m) + 1, cplx(0.0, 0.0));
        zm.c.back() = cplx(1.0, 0.0);
        jobs.push_back(IntegralJob::sgn(std::move(zm)));
    }
    EngineOptions eopt;
    eopt.tol = quad_tol;
    const std::vector<cplx> I = integrate_jobs(f, p, spec, rad, jobs, eopt);

    double worst = 0.0;
    for (int m = 0; m <= n; ++m) {
        const size_t mm = static_cast<size_t>(m);
        const cplx target = std::conj(b[mm]) * monomial_moment(spec, grid, m) / dual;
        const double hnorm = std::pow(monomial_norm_pow(spec, p, m, std::min(quad_tol, 1e-12)),
                                      1.0 / p);
        worst = std::max(worst, std::abs(I[mm] - target) / hnorm);
    }
    return worst;
}

std::vector<ConvergenceRow> subspace_convergence(const Poly& k, const Exponents& e,
                                                 const WeightSpec& spec, const QuadGrid& grid,
                                                 const std::vector<int>& n_list,
                                                 const SolveOptions& opts) {
    if (n_list.empty()) return {};
    const int N = n_list.back();
    const ExtremalSolution top = solve(k, N, e, spec, grid, opts);
    std::vector<ConvergenceRow> rows(n_list.size());
    parallel_for(n_list.size(), [&](size_t i) {
        const int n = n_list[i];
        const ExtremalSolution sol =
            n == N ? top : solve(k, n, e, spec, grid, opts);
        rows[i] = ConvergenceRow{n, sol.dual_norm,
                                 norm_p(sol.f - top.f, e.p, spec, opts.quad_tol,
                                        grid.plane ? grid.r_eff : 0.0)};
    });
    return rows;
}

std::vector<ContinuityRow> kernel_continuity_probe(const Poly& k, const Poly& h,
                                                   const std::vector<double>& deltas,
                                                   const Exponents& e, const WeightSpec& spec,
                                                   const QuadGrid& grid, int n,
                                                   const SolveOptions& opts) {
    const ExtremalSolution base = solve(k, n, e, spec, grid, opts);
    std::vector<ContinuityRow> rows(deltas.size());
    parallel_for(deltas.size(), [&](size_t i) {
        const double d = deltas[i];
        const Poly kd = k + h * cplx(d, 0.0);
        const ExtremalSolution sol = solve(kd, n, e, spec, grid, opts);
        rows[i] = ContinuityRow{d, norm_p(sol.f - base.f, e.p, spec, opts.quad_tol,
                                          grid.plane ? grid.r_eff : 0.0)};
    });
    return rows;
}

}  // namespace bergman
