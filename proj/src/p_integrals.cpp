#include "bergman/p_integrals.hpp"

#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bergman {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Gauss-Kronrod 7-15 pair on [-1,1] (Kronrod abscissae/weights plus the
// embedded 7-point Gauss weights at the odd-index abscissae).
constexpr int kGkHalf = 8;
constexpr double kGkX[kGkHalf] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kGkW[kGkHalf] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kGW[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

bool is_even_integer_p(double p) {
    const double r = std::round(p / 2.0) * 2.0;
    return std::abs(p - r) < 1e-12 && r >= 2.0;
}

// Distinct angular integrand: either A(z)|f|^{p-1}conj(sgn f) or |f|^p.
struct Component {
    IntegralJob::Kind kind;
    const Poly* A = nullptr;  // null for abs_power
};

struct CompSet {
    const Poly& f;
    double p;
    std::vector<Component> comps;

    // Values of every component at a point z where fv = f(z).
    void eval(cplx z, std::vector<cplx>& out) const {
        const cplx fv = f.eval(z);
        const double af = std::abs(fv);
        cplx sgn_factor(0.0, 0.0);
        double power_val = 0.0;
        if (af > 1e-280) {
            sgn_factor = std::pow(af, p - 1.0) * (std::conj(fv) / af);
            power_val = std::pow(af, p);
        }
        for (size_t c = 0; c < comps.size(); ++c) {
            if (comps[c].kind == IntegralJob::Kind::abs_power)
                out[c] = power_val;
            else
                out[c] = comps[c].A->eval(z) * sgn_factor;
        }
    }
};

struct RootInfo {
    std::vector<double> moduli;  // nonzero root moduli, sorted ascending
    std::vector<double> angles;  // matching arguments in [0, 2pi)
};

RootInfo collect_roots(const Poly& f) {
    RootInfo info;
    std::vector<std::pair<double, double>> ma;
    for (cplx zr : poly_roots(f)) {
        const double m = std::abs(zr);
        if (m <= 1e-14) continue;  // origin roots: angularly smooth factor z^s
        double a = std::arg(zr);
        if (a < 0.0) a += kTwoPi;
        ma.emplace_back(m, a);
    }
    std::sort(ma.begin(), ma.end());
    for (auto& [m, a] : ma) {
        info.moduli.push_back(m);
        info.angles.push_back(a);
    }
    return info;
}

// --- shared Gauss-Kronrod kernel --------------------------------------------

// One 15-node pass over [a,b] for a vector-valued evaluator f(x, vals).
// Returns the Kronrod values, the embedded-Gauss error estimates, and the
// per-component sup of the sampled magnitudes — the scale that bounds the
// estimator's own roundoff floor (~eps * sup).
template <class F>
void gk15_vec(const F& f, size_t K, double a, double b, std::vector<cplx>& res,
              std::vector<double>& err, std::vector<double>& vmax) {
    const double hc = 0.5 * (a + b), hl = 0.5 * (b - a);
    std::vector<cplx> sumK(K, cplx(0, 0)), sumG(K, cplx(0, 0));
    std::vector<cplx> vals(K);
    std::fill(vmax.begin(), vmax.end(), 0.0);
    for (int i = 0; i < kGkHalf; ++i) {
        const int reps = (i == kGkHalf - 1) ? 1 : 2;
        for (int s = 0; s < reps; ++s) {
            const double x = hc + (s == 0 ? -1.0 : 1.0) * hl * kGkX[i];
            f(x, vals);
            for (size_t c = 0; c < K; ++c) {
                sumK[c] += kGkW[i] * vals[c];
                if (i % 2 == 1) sumG[c] += kGW[i / 2] * vals[c];
                vmax[c] = std::max(vmax[c], std::abs(vals[c]));
            }
        }
    }
    for (size_t c = 0; c < K; ++c) {
        res[c] = hl * sumK[c];
        err[c] = std::abs(hl * (sumK[c] - sumG[c]));
    }
}

// --- vector-valued angular integration at a fixed radius -------------------

struct AngularIntegrator {
    const CompSet& cs;
    const RootInfo& roots;
    const EngineOptions& opt;
    mutable std::vector<cplx> scratch;
    // Per-component sup over the current circle (seeded from a coarse sample,
    // ratcheted upward as panels are evaluated). Panels are accepted relative
    // to this scale: near a cusp the local sup vanishes, and a panel-local
    // test degenerates to an absolute one that burns a bisection ladder on
    // mass that is negligible at the circle's own scale. The aggregate error
    // stays <= tol * 2pi * (1 + sup), the same sup-relative budget the
    // residual normalization absorbs.
    mutable std::vector<double> circle_scale;

    // Power grading exponent for segments ending at a root angle: under
    // theta = theta0 +/- len * v^6 the |g|^{p-1} cusp becomes v^{6(p-1)},
    // smooth enough for the rule over the whole p range served here, so the
    // cusp costs a few panels instead of a bisection ladder to the depth cap.
    static constexpr double kThetaGrade = 6.0;

    explicit AngularIntegrator(const CompSet& cs_, const RootInfo& roots_,
                               const EngineOptions& opt_)
        : cs(cs_), roots(roots_), opt(opt_), scratch(cs_.comps.size()),
          circle_scale(cs_.comps.size(), 0.0) {}

    size_t K() const { return cs.comps.size(); }

    void equispaced(double r, int M, std::vector<cplx>& out) const {
        std::vector<std::vector<cplx>> cols(K(), std::vector<cplx>(static_cast<size_t>(M)));
        for (int j = 0; j < M; ++j) {
            const double th = kTwoPi * double(j) / double(M);
            cs.eval(cplx(r * std::cos(th), r * std::sin(th)), scratch);
            for (size_t c = 0; c < K(); ++c) cols[c][static_cast<size_t>(j)] = scratch[c];
        }
        for (size_t c = 0; c < K(); ++c)
            out[c] = pairwise_sum(std::span<const cplx>(cols[c])) * (kTwoPi / double(M));
    }

    // Adaptive bisection, tolerance prorated by length and scaled by the
    // circle sup of each component. A pure absolute test is unreachable once
    // the GK error estimate hits its roundoff floor (~eps * sup), turning
    // every split into a livelock for large integrands; the panel integral is
    // no witness for that floor either, because the rotating phase of the sgn
    // components cancels it. With the sup factor the test is satisfiable at
    // any magnitude (eps < tol_per_x holds for every tolerance this engine
    // accepts).
    template <class F>
    void adaptive_fn(const F& f, double a, double b, double tol_per_x, int depth,
                     std::vector<cplx>& acc) const {
        std::vector<cplx> res(K());
        std::vector<double> err(K()), vmax(K());
        gk15_vec(f, K(), a, b, res, err, vmax);
        bool ok = true;
        for (size_t c = 0; c < K(); ++c) {
            circle_scale[c] = std::max(circle_scale[c], vmax[c]);
            if (err[c] > tol_per_x * (b - a) * (1.0 + circle_scale[c])) ok = false;
        }
        if (ok || depth >= opt.max_angular_depth) {
            for (size_t c = 0; c < K(); ++c) acc[c] += res[c];
            return;
        }
        const double m = 0.5 * (a + b);
        adaptive_fn(f, a, m, tol_per_x, depth + 1, acc);
        adaptive_fn(f, m, b, tol_per_x, depth + 1, acc);
    }

    // One graded flank [base, base+len] (len signed) of a root angle at base;
    // integrates over v in [0,1] with theta = base + len * v^grade.
    void graded_flank(double r, double base, double len, double tol_per_rad,
                      std::vector<cplx>& acc) const {
        const double g = kThetaGrade;
        auto mapped = [&](double v, std::vector<cplx>& vals) {
            const double th = base + len * std::pow(v, g);
            cs.eval(cplx(r * std::cos(th), r * std::sin(th)), vals);
            const double jac = std::abs(len) * g * std::pow(v, g - 1.0);
            for (auto& x : vals) x *= jac;
        };
        adaptive_fn(mapped, 0.0, 1.0, tol_per_rad * std::abs(len), 0, acc);
    }

    // Full-circle integral of all components at radius r.
    void integrate(double r, double ang_tol, std::vector<cplx>& out) const {
        // Closeness of this circle to each root circle, measured in the
        // analyticity-strip width |log(r/|zeta|)| of theta -> f(r e^{i theta}).
        double h_min = std::numeric_limits<double>::infinity();
        std::vector<double> near_angles;
        for (size_t i = 0; i < roots.moduli.size(); ++i) {
            const double h = std::abs(std::log(r / roots.moduli[i]));
            h_min = std::min(h_min, h);
            if (h <= 0.15) near_angles.push_back(roots.angles[i]);
        }
        std::fill(out.begin(), out.end(), cplx(0, 0));
        const double tol_per_rad = ang_tol / kTwoPi;
        auto plain = [&](double th, std::vector<cplx>& vals) {
            cs.eval(cplx(r * std::cos(th), r * std::sin(th)), vals);
        };
        if (h_min > 0.08) {
            // Equispaced with doubling: exponentially convergent here.
            std::vector<cplx> prev(K());
            int M = opt.min_angular;
            equispaced(r, M, prev);
            while (M < opt.max_angular) {
                M *= 2;
                equispaced(r, M, out);
                double rel = 0.0;
                for (size_t c = 0; c < K(); ++c)
                    rel = std::max(rel, std::abs(out[c] - prev[c]) / (1.0 + std::abs(out[c])));
                if (rel <= ang_tol) return;
                prev = out;
            }
            out = prev;
            return;
        }
        // Root circle nearby: segments between consecutive root arguments,
        // each integrated from both ends with the grading toward the cusps.
        // Seed the circle scale from a coarse sample so cusp-adjacent panels
        // see the circle's magnitude from the start.
        for (size_t c = 0; c < K(); ++c) circle_scale[c] = 0.0;
        for (int j = 0; j < opt.min_angular; ++j) {
            const double th = kTwoPi * (double(j) + 0.5) / double(opt.min_angular);
            cs.eval(cplx(r * std::cos(th), r * std::sin(th)), scratch);
            for (size_t c = 0; c < K(); ++c)
                circle_scale[c] = std::max(circle_scale[c], std::abs(scratch[c]));
        }
        std::sort(near_angles.begin(), near_angles.end());
        near_angles.erase(std::unique(near_angles.begin(), near_angles.end()), near_angles.end());
        if (near_angles.empty()) {
            adaptive_fn(plain, 0.0, M_PI, tol_per_rad, 0, out);
            adaptive_fn(plain, M_PI, kTwoPi, tol_per_rad, 0, out);
            return;
        }
        std::vector<double> brk(near_angles);
        brk.push_back(near_angles.front() + kTwoPi);
        for (size_t s = 0; s + 1 < brk.size(); ++s) {
            if (brk[s + 1] <= brk[s] + 1e-15) continue;
            const double m = 0.5 * (brk[s] + brk[s + 1]);
            graded_flank(r, brk[s], m - brk[s], tol_per_rad, out);
            graded_flank(r, brk[s + 1], m - brk[s + 1], tol_per_rad, out);
        }
    }
};

// --- radial layer -----------------------------------------------------------

struct RadialIntegrand {
    const AngularIntegrator& ang;
    const WeightSpec& spec;
    const std::vector<size_t>& comp_of_job;
    const std::vector<RadialWeight>& rho_of_job;
    double ang_tol;
    mutable std::vector<cplx> tvals;

    RadialIntegrand(const AngularIntegrator& ang_, const WeightSpec& spec_,
                    const std::vector<size_t>& cj, const std::vector<RadialWeight>& rj,
                    double ang_tol_)
        : ang(ang_), spec(spec_), comp_of_job(cj), rho_of_job(rj), ang_tol(ang_tol_),
          tvals(ang_.K()) {}

    size_t J() const { return comp_of_job.size(); }

    void eval(double r, std::vector<cplx>& out) const {
        ang.integrate(r, ang_tol, tvals);
        const double x = r * r;
        const double w = spec.w(x);
        const double dw = -x * spec.w_prime(x);
        for (size_t j = 0; j < J(); ++j) {
            const double rho = (rho_of_job[j] == RadialWeight::w) ? w : dw;
            out[j] = tvals[comp_of_job[j]] * (rho * r);
        }
    }

};

// One graded flank r(u) = base + len * u^4, u in [0,1] (len signed): removes
// the |r - r0|^p cusp that the angular integral leaves at a root modulus r0,
// so the rule converges at full order instead of bisecting a ladder into it.
struct GradedRadial {
    const RadialIntegrand& ri;
    double base, len;
    static constexpr double kGrade = 4.0;
    void operator()(double u, std::vector<cplx>& out) const {
        ri.eval(base + len * std::pow(u, kGrade), out);
        const double jac = std::abs(len) * kGrade * std::pow(u, kGrade - 1.0);
        for (auto& v : out) v *= jac;
    }
};

// GK error estimates carry a roundoff floor ~eps * sup(|integrand|) that is
// proportional to panel length, so an acceptance test below that floor splits
// forever; the vmax term keeps the test satisfiable at any magnitude while
// adding only O(eps) relative error.
constexpr double kGkNoiseFloor = 16.0 * std::numeric_limits<double>::epsilon();

template <class F>
void radial_adaptive(const F& f, size_t J, double a, double b,
                     const std::vector<double>& tol_per_len, int depth, int max_depth,
                     std::vector<cplx>& acc) {
    std::vector<cplx> res(J);
    std::vector<double> err(J), vmax(J);
    gk15_vec(f, J, a, b, res, err, vmax);
    bool ok = true;
    for (size_t j = 0; j < J; ++j)
        if (err[j] > (b - a) * (tol_per_len[j] + kGkNoiseFloor * vmax[j])) {
            ok = false;
            break;
        }
    if (ok || depth >= max_depth) {
        for (size_t j = 0; j < J; ++j) acc[j] += res[j];
        return;
    }
    const double m = 0.5 * (a + b);
    radial_adaptive(f, J, a, m, tol_per_len, depth + 1, max_depth, acc);
    radial_adaptive(f, J, m, b, tol_per_len, depth + 1, max_depth, acc);
}

// Integrates one top-level radial panel, grading toward whichever endpoints
// sit on a root circle (both-singular panels are split at the midpoint).
void integrate_radial_panel(const RadialIntegrand& ri, double a, double b, bool sing_a,
                            bool sing_b, const std::vector<double>& tol_per_len, int max_depth,
                            std::vector<cplx>& out) {
    if (sing_a && sing_b) {
        const double m = 0.5 * (a + b);
        integrate_radial_panel(ri, a, m, true, false, tol_per_len, max_depth, out);
        integrate_radial_panel(ri, m, b, false, true, tol_per_len, max_depth, out);
        return;
    }
    if (!sing_a && !sing_b) {
        auto plain = [&ri](double r, std::vector<cplx>& vals) { ri.eval(r, vals); };
        radial_adaptive(plain, ri.J(), a, b, tol_per_len, 0, max_depth, out);
        return;
    }
    const GradedRadial g{ri, sing_a ? a : b, sing_a ? (b - a) : (a - b)};
    std::vector<double> tol_u(tol_per_len.size());
    for (size_t j = 0; j < tol_u.size(); ++j) tol_u[j] = tol_per_len[j] * (b - a);
    radial_adaptive(g, ri.J(), 0.0, 1.0, tol_u, 0, max_depth, out);
}

// Even integer p: integrands are polynomials in (z, conj z) times the radial
// weight, so an equispaced angular rule of sufficient order is exact and the
// radial factor is cusp-free; one smooth tensor pass suffices.
std::vector<cplx> even_p_tensor(const Poly& f, double p, const WeightSpec& spec, double rad,
                                const std::vector<IntegralJob>& jobs) {
    const int pi = static_cast<int>(std::lround(p));
    const int n = std::max(f.degree(), 0);
    int max_da = 0;
    for (const auto& job : jobs)
        if (job.kind == IntegralJob::Kind::sgn_part)
            max_da = std::max(max_da, std::max(job.A.degree(), 0));
    const int max_harmonic = max_da + n * pi;  // covers both integrand kinds
    const int M = std::max(8, 2 * (max_harmonic + 2));
    const int radial_order = std::max(96, (max_harmonic + 4) / 2 + 48);

    std::vector<double> gx, gw;
    gauss_legendre(radial_order, gx, gw);

    std::vector<std::vector<cplx>> per_r(jobs.size(),
                                         std::vector<cplx>(static_cast<size_t>(radial_order)));
    std::vector<cplx> ring(jobs.size());
    for (int i = 0; i < radial_order; ++i) {
        const double r = 0.5 * rad * (gx[static_cast<size_t>(i)] + 1.0);
        const double x = r * r;
        const double wv = spec.w(x);
        const double dwv = -x * spec.w_prime(x);
        std::fill(ring.begin(), ring.end(), cplx(0, 0));
        for (int jth = 0; jth < M; ++jth) {
            const double th = kTwoPi * double(jth) / double(M);
            const cplx z(r * std::cos(th), r * std::sin(th));
            const cplx fv = f.eval(z);
            const double af = std::abs(fv);
            cplx sgn_factor(0, 0);
            double power_val = 0.0;
            if (af > 1e-280) {
                sgn_factor = std::pow(af, p - 1.0) * (std::conj(fv) / af);
                power_val = std::pow(af, p);
            }
            for (size_t j = 0; j < jobs.size(); ++j) {
                if (jobs[j].kind == IntegralJob::Kind::abs_power)
                    ring[j] += power_val;
                else
                    ring[j] += jobs[j].A.eval(z) * sgn_factor;
            }
        }
        const double wr = 0.5 * rad * gw[static_cast<size_t>(i)] * r * (kTwoPi / double(M));
        for (size_t j = 0; j < jobs.size(); ++j) {
            const double rho = (jobs[j].rho == RadialWeight::w) ? wv : dwv;
            per_r[j][static_cast<size_t>(i)] = ring[j] * (wr * rho);
        }
    }
    std::vector<cplx> out(jobs.size());
    for (size_t j = 0; j < jobs.size(); ++j)
        out[j] = pairwise_sum(std::span<const cplx>(per_r[j]));
    return out;
}

}  // namespace

std::vector<cplx> integrate_jobs(const Poly& f, double p, const WeightSpec& spec, double rad,
                                 const std::vector<IntegralJob>& jobs,
                                 const EngineOptions& opt) {
    if (p < 1.0) throw std::invalid_argument("integrate_jobs: requires p >= 1");
    if (!(rad > 0.0)) throw std::invalid_argument("integrate_jobs: requires rad > 0");
    if (!spec.is_plane() && rad > spec.radius() * (1.0 + 1e-12))
        throw std::domain_error("integrate_jobs: rad exceeds the weight's disc radius");
    if (jobs.empty()) return {};
    if (f.is_zero()) return std::vector<cplx>(jobs.size(), cplx(0, 0));
    if (is_even_integer_p(p)) return even_p_tensor(f, p, spec, rad, jobs);

    // Deduplicate angular components (all abs_power jobs share one).
    CompSet cs{f, p, {}};
    std::vector<size_t> comp_of_job(jobs.size());
    std::vector<RadialWeight> rho_of_job(jobs.size());
    int power_comp = -1;
    for (size_t j = 0; j < jobs.size(); ++j) {
        rho_of_job[j] = jobs[j].rho;
        if (jobs[j].kind == IntegralJob::Kind::abs_power) {
            if (power_comp < 0) {
                power_comp = static_cast<int>(cs.comps.size());
                cs.comps.push_back({IntegralJob::Kind::abs_power, nullptr});
            }
            comp_of_job[j] = static_cast<size_t>(power_comp);
        } else {
            comp_of_job[j] = cs.comps.size();
            cs.comps.push_back({IntegralJob::Kind::sgn_part, &jobs[j].A});
        }
    }

    const RootInfo roots = collect_roots(f);
    const AngularIntegrator ang(cs, roots, opt);
    const double ang_tol = 0.02 * opt.tol;
    const RadialIntegrand ri(ang, spec, comp_of_job, rho_of_job, ang_tol);

    // Radial panels split at root moduli inside (0, rad); those break points
    // carry the endpoint cusp the graded panels are aimed at. The origin is a
    // cusp of the same kind (|f|^p ~ r^{sp}) whenever f vanishes there.
    std::vector<double> brk{0.0};
    for (double m : roots.moduli)
        if (m > 1e-12 * rad && m < rad * (1.0 - 1e-12)) brk.push_back(m);
    brk.push_back(rad);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [&](double a, double b) { return b - a < 1e-12 * rad; }),
              brk.end());
    if (brk.back() < rad) brk.back() = rad;
    std::vector<char> sing(brk.size(), 0);
    sing.front() = (!f.c.empty() && f.c.front() == cplx(0.0, 0.0)) ? 1 : 0;
    for (size_t s = 1; s + 1 < brk.size(); ++s) sing[s] = 1;

    // Scale pass: one GK estimate per panel fixes the per-job tolerances.
    std::vector<cplx> rough(jobs.size(), cplx(0, 0));
    {
        auto plain = [&ri](double r, std::vector<cplx>& vals) { ri.eval(r, vals); };
        std::vector<cplx> res(jobs.size());
        std::vector<double> err(jobs.size()), vmax(jobs.size());
        for (size_t s = 0; s + 1 < brk.size(); ++s) {
            gk15_vec(plain, jobs.size(), brk[s], brk[s + 1], res, err, vmax);
            for (size_t j = 0; j < jobs.size(); ++j) rough[j] += res[j];
        }
    }
    std::vector<double> tol_per_len(jobs.size());
    for (size_t j = 0; j < jobs.size(); ++j)
        tol_per_len[j] = 0.5 * opt.tol * (1.0 + std::abs(rough[j])) / rad;

    std::vector<cplx> out(jobs.size(), cplx(0, 0));
    for (size_t s = 0; s + 1 < brk.size(); ++s)
        integrate_radial_panel(ri, brk[s], brk[s + 1], sing[s] != 0, sing[s + 1] != 0,
                               tol_per_len, opt.max_radial_depth, out);
    return out;
}

double angular_power_mean(const Poly& f, double p, double r, double tol) {
    if (!(p > 0.0)) throw std::invalid_argument("angular_power_mean: requires p > 0");
    if (!(r >= 0.0)) throw std::invalid_argument("angular_power_mean: requires r >= 0");
    if (f.is_zero()) return 0.0;
    if (r == 0.0) return kTwoPi * std::pow(std::abs(f.eval(cplx(0, 0))), p);

    auto equispaced = [&](int M) {
        std::vector<double> vals(static_cast<size_t>(M));
        for (int j = 0; j < M; ++j) {
            const double th = kTwoPi * double(j) / double(M);
            vals[static_cast<size_t>(j)] =
                std::pow(std::abs(f.eval(cplx(r * std::cos(th), r * std::sin(th)))), p);
        }
        return pairwise_sum(std::span<const double>(vals)) * (kTwoPi / double(M));
    };

    const double pr = std::round(p / 2.0) * 2.0;
    const bool even_p = std::abs(p - pr) < 1e-12 && pr >= 2.0;
    if (even_p) {
        const int M = std::max(16, std::max(f.degree(), 0) * static_cast<int>(pr) + 4);
        return equispaced(M);  // angularly exact
    }

    const RootInfo roots = collect_roots(f);
    double h_min = std::numeric_limits<double>::infinity();
    std::vector<double> near_angles;
    for (size_t i = 0; i < roots.moduli.size(); ++i) {
        const double h = std::abs(std::log(r / roots.moduli[i]));
        h_min = std::min(h_min, h);
        if (h <= 0.15) near_angles.push_back(roots.angles[i]);
    }
    if (h_min > 0.08) {
        int M = 64;
        double prev = equispaced(M);
        while (M < (1 << 15)) {
            M *= 2;
            const double cur = equispaced(M);
            if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
            prev = cur;
        }
        return prev;
    }

    std::sort(near_angles.begin(), near_angles.end());
    near_angles.erase(std::unique(near_angles.begin(), near_angles.end()), near_angles.end());
    std::vector<double> brk;
    if (near_angles.empty()) {
        brk = {0.0, M_PI, kTwoPi};
    } else {
        for (double a : near_angles) brk.push_back(a);
        brk.push_back(near_angles.front() + kTwoPi);
    }
    auto gk = [&](double a, double b, double& err) {
        const double hc = 0.5 * (a + b), hl = 0.5 * (b - a);
        double sumK = 0.0, sumG = 0.0;
        for (int i = 0; i < kGkHalf; ++i) {
            const int reps = (i == kGkHalf - 1) ? 1 : 2;
            for (int s = 0; s < reps; ++s) {
                const double th = hc + (s == 0 ? -1.0 : 1.0) * hl * kGkX[i];
                const double v =
                    std::pow(std::abs(f.eval(cplx(r * std::cos(th), r * std::sin(th)))), p);
                sumK += kGkW[i] * v;
                if (i % 2 == 1) sumG += kGW[i / 2] * v;
            }
        }
        err = std::abs(hl * (sumK - sumG));
        return hl * sumK;
    };
    const double scale_tol = tol / kTwoPi;
    double total = 0.0;
    std::function<void(double, double, int)> recurse = [&](double a, double b, int depth) {
        double err = 0.0;
        const double val = gk(a, b, err);
        if (err <= scale_tol * (b - a) * (1.0 + std::abs(val)) || depth >= 30) {
            total += val;
            return;
        }
        const double m = 0.5 * (a + b);
        recurse(a, m, depth + 1);
        recurse(m, b, depth + 1);
    };
    for (size_t s = 0; s + 1 < brk.size(); ++s)
        if (brk[s + 1] > brk[s] + 1e-15) recurse(brk[s], brk[s + 1], 0);
    return total;
}

}  // namespace bergman
