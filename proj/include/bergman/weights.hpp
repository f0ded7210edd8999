#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace bergman {

// Diagnostics from WeightSpec::validate. `tail_max[n]` is the largest value of
// r^n w(r^2) over the tail half of the probe grid (plane weights only).
struct ValidationReport {
    bool positive = false;
    bool nonincreasing = false;
    bool nonconstant = false;
    bool decay_ok = true;  // plane: r^n w(r^2) -> 0 and r^n (-w'(r^2)) -> 0 evidence
    bool valid = false;
    std::vector<double> tail_max;
    std::string detail;
};

// Radial weight nu(z) = w(|z|^2) on a disc of radius R (R = +inf for the
// plane). w is positive and non-increasing on [0, R^2) with one-sided limits
// at the endpoints; named families evaluate their closed form at x = R^2
// directly, which is the left limit used in the boundary terms.
class WeightSpec {
  public:
    enum class Family { fock, affine, power, custom };

    // w(x) = (1/alpha) e^{-alpha x} on the plane.
    static WeightSpec fock(double alpha);
    // w(x) = a - b x on [0, R^2]; needs a > 0, b >= 0, a - b R^2 >= 0 and b > 0
    // unless a - b R^2 > 0.
    static WeightSpec affine_disc(double a, double b, double R);
    // w(x) = (1 - x/R^2)^beta, beta >= 0.
    static WeightSpec power_disc(double beta, double R);
    // Caller-supplied evaluators for w and w'. For finite R, w_at_R2 supplies
    // the left limit at R^2 (defaults to evaluating w there).
    static WeightSpec custom(std::function<double(double)> w_fn,
                             std::function<double(double)> wp_fn, double R,
                             double w_at_R2 = std::numeric_limits<double>::quiet_NaN(),
                             std::string label = "custom");

    Family family() const { return family_; }
    double radius() const { return R_; }
    bool is_plane() const { return R_ == std::numeric_limits<double>::infinity(); }
    const std::string& label() const { return label_; }

    // w(x) for 0 <= x <= R^2 (x = R^2 is the left limit). Throws
    // std::domain_error outside the domain.
    double w(double x) const;
    double w_prime(double x) const;
    // log w(x); exact -alpha*x - log(alpha) for fock.
    double log_w(double x) const;
    // Left limit w(R^2-); finite radius only.
    double w_boundary() const;

    // log lambda(x) and its x-derivative, lambda(x) = -1/w'(x^2); plane only.
    // For fock this is exactly alpha x^2.
    double log_lambda(double x) const;
    double dlog_lambda(double x) const;

    // Positivity/monotonicity on a probe grid; for the plane additionally
    // decay evidence r^n w(r^2) -> 0 and r^n (-w'(r^2)) -> 0 for n <= n_check:
    // the tail half of the grid must be nonincreasing with its last value
    // below decay_threshold. Sets the validated flag on success.
    ValidationReport validate(int n_check = 8, int grid_points = 512, double r_max = 16.0,
                              double decay_threshold = 1e-8);
    bool validated() const { return validated_; }

    // Family parameters (NaN when not applicable).
    double alpha() const { return alpha_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double beta() const { return beta_; }

  private:
    WeightSpec() = default;
    void check_domain(double x) const;

    Family family_ = Family::custom;
    double R_ = std::numeric_limits<double>::infinity();
    double alpha_ = std::numeric_limits<double>::quiet_NaN();
    double a_ = std::numeric_limits<double>::quiet_NaN();
    double b_ = std::numeric_limits<double>::quiet_NaN();
    double beta_ = std::numeric_limits<double>::quiet_NaN();
    std::function<double(double)> w_fn_, wp_fn_;
    double w_at_R2_ = std::numeric_limits<double>::quiet_NaN();
    std::string label_;
    bool validated_ = false;
};

// lambda(x) = -1/w'(x^2); +inf on overflow. Plane weights only.
double lambda_of(const WeightSpec& spec, double x);

}  // namespace bergman
