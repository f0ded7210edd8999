#include "bergman/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

WeightSpec WeightSpec::fock(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("fock weight: alpha must be a positive real, got " + fmt(alpha));
    WeightSpec s;
    s.family_ = Family::fock;
    s.alpha_ = alpha;
    s.R_ = std::numeric_limits<double>::infinity();
    s.label_ = "fock:alpha=" + fmt(alpha);
    return s;
}

WeightSpec WeightSpec::affine_disc(double a, double b, double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("affine weight: R must be a positive real, got " + fmt(R));
    if (!(a > 0.0) || !(b >= 0.0))
        throw std::invalid_argument("affine weight: needs a > 0 and b >= 0");
    const double wR2 = a - b * R * R;
    if (!(wR2 >= 0.0) || (wR2 == 0.0 && b == 0.0))
        throw std::invalid_argument("affine weight: needs a - b R^2 >= 0 with w not identically 0");
    WeightSpec s;
    s.family_ = Family::affine;
    s.a_ = a;
    s.b_ = b;
    s.R_ = R;
    s.label_ = "affine:a=" + fmt(a) + ",b=" + fmt(b) + ",R=" + fmt(R);
    return s;
}

WeightSpec WeightSpec::power_disc(double beta, double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("power weight: R must be a positive real, got " + fmt(R));
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("power weight: beta must be >= 0, got " + fmt(beta));
    WeightSpec s;
    s.family_ = Family::power;
    s.beta_ = beta;
    s.R_ = R;
    s.label_ = "power:beta=" + fmt(beta) + ",R=" + fmt(R);
    return s;
}

WeightSpec WeightSpec::custom(std::function<double(double)> w_fn,
                              std::function<double(double)> wp_fn, double R, double w_at_R2,
                              std::string label) {
    if (!w_fn || !wp_fn) throw std::invalid_argument("custom weight: evaluators must be callable");
    if (!(R > 0.0)) throw std::invalid_argument("custom weight: R must be positive (inf for plane)");
    WeightSpec s;
    s.family_ = Family::custom;
    s.R_ = R;
    s.w_fn_ = std::move(w_fn);
    s.wp_fn_ = std::move(wp_fn);
    s.w_at_R2_ = w_at_R2;
    s.label_ = std::move(label);
    return s;
}

void WeightSpec::check_domain(double x) const {
    if (!(x >= 0.0) || (!is_plane() && x > R_ * R_ * (1.0 + 1e-14)) || !std::isfinite(x))
        throw std::domain_error("weight argument outside [0, R^2]: x=" + fmt(x) +
                                " for weight " + label_);
}

double WeightSpec::w(double x) const {
    check_domain(x);
    switch (family_) {
        case Family::fock: return std::exp(-alpha_ * x) / alpha_;
        case Family::affine: return a_ - b_ * x;
        case Family::power: {
            const double t = 1.0 - x / (R_ * R_);
            return beta_ == 0.0 ? 1.0 : std::pow(std::max(t, 0.0), beta_);
        }
        case Family::custom:
            if (!is_plane() && x >= R_ * R_ && std::isfinite(w_at_R2_)) return w_at_R2_;
            return w_fn_(x);
    }
    return 0.0;
}

double WeightSpec::w_prime(double x) const {
    check_domain(x);
    switch (family_) {
        case Family::fock: return -std::exp(-alpha_ * x);
        case Family::affine: return -b_;
        case Family::power: {
            if (beta_ == 0.0) return 0.0;
            const double t = std::max(1.0 - x / (R_ * R_), 0.0);
            return -(beta_ / (R_ * R_)) * std::pow(t, beta_ - 1.0);
        }
        case Family::custom: return wp_fn_(x);
    }
    return 0.0;
}

double WeightSpec::log_w(double x) const {
    if (family_ == Family::fock) return -alpha_ * x - std::log(alpha_);
    return std::log(w(x));
}

double WeightSpec::w_boundary() const {
    if (is_plane()) throw std::domain_error("w_boundary: weight " + label_ + " has no finite radius");
    return w(R_ * R_);
}

double WeightSpec::log_lambda(double x) const {
    if (!is_plane()) throw std::domain_error("log_lambda: defined for plane weights only");
    if (family_ == Family::fock) return alpha_ * x * x;
    const double wp = w_prime(x * x);
    if (!(wp < 0.0))
        throw std::domain_error("log_lambda: w'(x^2) must be negative, got " + fmt(wp) +
                                " at x=" + fmt(x));
    return -std::log(-wp);
}

double WeightSpec::dlog_lambda(double x) const {
    if (!is_plane()) throw std::domain_error("dlog_lambda: defined for plane weights only");
    if (family_ == Family::fock) return 2.0 * alpha_ * x;
    // Central difference on log lambda; custom evaluators are only assumed C^1.
    const double h = std::max(1e-6, 1e-6 * std::abs(x));
    const double xm = std::max(x - h, 1e-12);
    return (log_lambda(x + h) - log_lambda(xm)) / (x + h - xm);
}

double lambda_of(const WeightSpec& spec, double x) {
    const double ll = spec.log_lambda(x);
    return ll > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(ll);
}

ValidationReport WeightSpec::validate(int n_check, int grid_points, double r_max,
                                      double decay_threshold) {
    if (n_check < 0 || grid_points < 8)
        throw std::invalid_argument("validate: need n_check >= 0 and grid_points >= 8");
    ValidationReport rep;
    const bool plane = is_plane();
    const double rmax = plane ? r_max : R_;

    std::vector<double> rs(static_cast<size_t>(grid_points));
    if (plane) {
        // Geometric grid; covers several decades so decay is visible.
        const double r0 = rmax * 1e-4;
        for (int i = 0; i < grid_points; ++i)
            rs[static_cast<size_t>(i)] =
                r0 * std::pow(rmax / r0, double(i) / double(grid_points - 1));
    } else {
        for (int i = 0; i < grid_points; ++i)
            rs[static_cast<size_t>(i)] = rmax * double(i) / double(grid_points - 1);
    }

    rep.positive = true;
    rep.nonincreasing = true;
    rep.nonconstant = false;
    double prev_w = std::numeric_limits<double>::infinity();
    for (double r : rs) {
        const double x = std::min(r * r, plane ? r * r : R_ * R_);
        const double wv = w(x);
        const double wp = w_prime(x);
        const bool interior = plane || x < R_ * R_;
        // On the plane a fast-decaying weight may underflow to 0 at the far
        // end of the probe grid; a finite log_w certifies it is positive.
        const bool underflow = plane && wv == 0.0 && std::isfinite(log_w(x));
        if (interior && !(wv > 0.0) && !underflow) rep.positive = false;
        if (!(wp <= 0.0)) rep.nonincreasing = false;
        if (wp < 0.0) rep.nonconstant = true;
        if (wv > prev_w * (1.0 + 1e-12)) rep.nonincreasing = false;
        prev_w = wv;
    }

    if (plane) {
        // Decay evidence: on some doubling window [h/2, h] with h >= r_max the
        // probe values r^n w(r^2) and r^n |w'(r^2)| must be nonincreasing and
        // end below the threshold. Doubling lets slowly decaying (small-rate)
        // weights reach their genuine tail.
        rep.tail_max.assign(static_cast<size_t>(n_check + 1), 0.0);
        const int tail_pts = std::max(grid_points / 2, 16);
        for (int n = 0; n <= n_check; ++n) {
            bool ok = false;
            double mx_keep = 0.0;
            for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
                const double hi = rmax * std::pow(2.0, attempt);
                const double lo = hi / 2.0;
                double mx = 0.0;
                double prev = std::numeric_limits<double>::infinity();
                double last = 0.0;
                bool mono = true;
                for (int i = 0; i < tail_pts; ++i) {
                    const double r =
                        lo * std::pow(hi / lo, double(i) / double(tail_pts - 1));
                    const double v = std::pow(r, double(n)) * w(r * r);
                    const double vp = std::pow(r, double(n)) * (-w_prime(r * r));
                    const double both = std::max(v, vp);
                    mx = std::max(mx, both);
                    if (both > prev * (1.0 + 1e-12)) mono = false;
                    prev = both;
                    last = both;
                }
                mx_keep = mx;
                ok = mono && last < decay_threshold;
            }
            rep.tail_max[static_cast<size_t>(n)] = mx_keep;
            if (!ok) rep.decay_ok = false;
        }
    }

    rep.valid = rep.positive && rep.nonincreasing && rep.nonconstant && rep.decay_ok;
    if (!rep.valid) {
        std::ostringstream os;
        os << "weight " << label_ << " invalid:";
        if (!rep.positive) os << " not positive on the domain;";
        if (!rep.nonincreasing) os << " not non-increasing;";
        if (!rep.nonconstant) os << " constant (w' never negative);";
        if (!rep.decay_ok) os << " tail decay evidence failed (r^n w(r^2) or r^n |w'(r^2)|);";
        rep.detail = os.str();
    } else {
        rep.detail = "ok";
        validated_ = true;
    }
    return rep;
}

}  // namespace bergman
