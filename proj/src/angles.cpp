#include "lrpulse/angles.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lrpulse/errors.hpp"

namespace lrpulse {

AngleTrajectory::AngleTrajectory(std::function<double(double)> gamma,
                                 std::function<double(double)> beta,
                                 std::function<double(double)> gamma_dot,
                                 std::function<double(double)> beta_dot,
                                 double t_f)
    : gamma_(std::move(gamma)),
      beta_(std::move(beta)),
      gamma_dot_(std::move(gamma_dot)),
      beta_dot_(std::move(beta_dot)),
      t_f_(t_f) {
    if (!(t_f_ > 0.0)) {
        throw ValidationError("trajectory duration must be positive");
    }
}

double AngleTrajectory::max_derivative_mismatch(int n_samples) const {
    // Interior samples only; the stencil must stay inside [0, t_f].
    const double h = 1e-6 * t_f_;
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double t = t_f_ * (i + 1.0) / (n_samples + 1.0);
        const double fd_gamma = (gamma_(t + h) - gamma_(t - h)) / (2.0 * h);
        const double fd_beta = (beta_(t + h) - beta_(t - h)) / (2.0 * h);
        const double g_scale = std::max(1.0, std::abs(gamma_dot_(t)));
        const double b_scale = std::max(1.0, std::abs(beta_dot_(t)));
        worst = std::max(worst, std::abs(fd_gamma - gamma_dot_(t)) / g_scale);
        worst = std::max(worst, std::abs(fd_beta - beta_dot_(t)) / b_scale);
    }
    return worst;
}

} // namespace lrpulse
