#include "bergman/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RadialProfile profile_of(const WeightSpec& spec) {
    WeightSpec s = spec;
    return RadialProfile{[s](double t) { return s.log_w(t * t); }, spec.label()};
}

double point_eval_bound(const WeightSpec& spec, cplx z, const Exponents& e) {
    const double az = std::abs(z);
    if (spec.is_plane()) {
        const double lw = spec.log_w((az + 1.0) * (az + 1.0));
        return std::exp((std::log(M_PI) - lw) / e.p);
    }
    const double R = spec.radius();
    if (!(az < R)) throw std::domain_error("point_eval_bound: point must satisfy |z| < R");
    const double rp = (R - az) / 2.0;
    // Decreasing weight: the infimum over the disc of radius r' about z is
    // attained at the outer edge |w| = |z| + r'.
    const double m_z = spec.w((az + rp) * (az + rp));
    if (!(m_z > 0.0))
        throw std::domain_error("point_eval_bound: weight vanishes on the comparison disc");
    return std::pow(m_z * M_PI * rp * rp, -1.0 / e.p);
}

std::vector<DilationRow> dilation_convergence(const Poly& f, const WeightSpec& spec,
                                              const Exponents& e,
                                              const std::vector<double>& rho_list,
                                              double tol) {
    std::vector<DilationRow> rows;
    rows.reserve(rho_list.size());
    for (double rho : rho_list) {
        if (!(rho >= 0.0 && rho <= 1.0))
            throw std::invalid_argument("dilation_convergence: rho must lie in [0,1]");
        const Poly diff = f - dilate(f, rho);
        const double d = diff.is_zero() ? 0.0 : norm_p(diff, e.p, spec, tol);
        rows.push_back({rho, d});
    }
    return rows;
}

DensityReport check_plane_density(const RadialProfile& profile, const Exponents& e,
                                  double rho, double beta, double tol) {
    if (!profile.log_nu) throw std::invalid_argument("check_plane_density: profile has no evaluator");
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("check_plane_density: rho must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("check_plane_density: beta must lie in (0,1)");
    if (!(tol > 0.0)) throw std::invalid_argument("check_plane_density: tol must be positive");

    const auto& L = profile.log_nu;
    const double p = e.p;

    auto g1 = [&L, rho, beta, p](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(-(2.0 / p) * L(rho * t + 1.0) + (2.0 * beta / p) * L(t)) * t;
    };
    auto g2 = [&L, beta](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(-beta * L(t + 1.0) + L(t)) * t;
    };

    DensityReport rep;
    rep.condition = "plane-density-integrals";
    rep.p = p;
    rep.rho = rho;
    rep.beta = beta;

    auto certify = [tol](const std::function<double(double)>& g, double& value,
                         double& tail_bound, bool& finite) {
        const double head = integrate_1d(g, 0.0, 1.0, tol);
        const TailCert cert = integrate_tail(g, 1.0, tol * (1.0 + std::abs(head)));
        finite = cert.finite;
        tail_bound = cert.bound;
        value = finite ? 2.0 * M_PI * (head + cert.value) : kInf;
    };
    certify(g1, rep.I1, rep.tail1, rep.finite1);
    certify(g2, rep.I2, rep.tail2, rep.finite2);
    rep.finite = rep.finite1 && rep.finite2;

    std::ostringstream os;
    os << "profile " << (profile.label.empty() ? std::string("custom") : profile.label)
       << ": I1 " << (rep.finite1 ? "certified finite" : "divergent") << ", I2 "
       << (rep.finite2 ? "certified finite" : "divergent");
    rep.notes = os.str();
    return rep;
}

DensityReport check_plane_density(const WeightSpec& spec, const Exponents& e, double rho,
                                  double beta, double tol) {
    if (!spec.is_plane())
        throw std::invalid_argument("check_plane_density: weight must live on the whole plane");
    DensityReport rep = check_plane_density(profile_of(spec), e, rho, beta, tol);
    if (spec.family() == WeightSpec::Family::fock) rep.alpha = spec.alpha();
    return rep;
}

DensityReport fock_density_certificate(double alpha, const Exponents& e) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("fock_density_certificate: alpha must be positive");
    std::ostringstream lbl;
    lbl << "combined:alpha=" << alpha;
    const RadialProfile combined{
        [alpha](double t) { return std::log1p(t * t) - alpha * t * t; }, lbl.str()};
    DensityReport rep = check_plane_density(combined, e, 0.5, 0.75, 1e-8);
    rep.condition = "fock-combined-density";
    rep.alpha = alpha;
    return rep;
}

DensityReport disc_density_report(const WeightSpec& spec, const Exponents& e) {
    if (spec.is_plane())
        throw std::invalid_argument("disc_density_report: weight must live on a finite disc");
    DensityReport rep;
    rep.condition = "disc-density";
    rep.p = e.p;
    rep.I1 = std::numeric_limits<double>::quiet_NaN();
    rep.I2 = std::numeric_limits<double>::quiet_NaN();
    rep.finite1 = rep.finite2 = rep.finite = true;
    rep.notes = "bounded radius: polynomial density holds unconditionally";
    return rep;
}

double closed_graph_ratio(double alpha, int n, double p, double tol) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("closed_graph_ratio: alpha must be positive");
    if (n < 0) throw std::invalid_argument("closed_graph_ratio: degree must be nonnegative");
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("closed_graph_ratio: p must be positive");

    // Bare radial moment 2*pi * Int_0^inf r^{s+1} e^{-alpha r^2} dr.
    auto moment = [alpha, tol](double s) {
        auto g = [alpha, s](double r) {
            if (r <= 0.0) return 0.0;
            return std::exp(s * std::log(r) - alpha * r * r) * r;
        };
        const double rough_rad = certified_tail_radius(g, 0.5, "closed_graph_ratio (rough)");
        const double rough = integrate_1d(g, 0.0, rough_rad, 1e-6);
        const double rad = certified_tail_radius(g, tol * std::max(std::abs(rough), 1e-300),
                                                 "closed_graph_ratio");
        return 2.0 * M_PI * integrate_1d(g, 0.0, std::max(rad, rough_rad), tol);
    };
    const double m_top = moment(double(n) * p + 2.0);
    const double m_bot = moment(double(n) * p);
    return std::pow(m_top / m_bot, 1.0 / p);
}

}  // namespace bergman
