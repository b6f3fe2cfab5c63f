#pragma once

#include <functional>

namespace lrpulse {

// Auxiliary angles gamma(t), beta(t) parameterizing the invariant,
// with analytic first derivatives. The derivatives are supplied by the
// protocol constructors, never by numerical differentiation: the
// synthesis formulas divide by sin(gamma) and deserve exact inputs.
class AngleTrajectory {
public:
    AngleTrajectory(std::function<double(double)> gamma,
                    std::function<double(double)> beta,
                    std::function<double(double)> gamma_dot,
                    std::function<double(double)> beta_dot,
                    double t_f);

    double gamma(double t) const { return gamma_(t); }
    double beta(double t) const { return beta_(t); }
    double gamma_dot(double t) const { return gamma_dot_(t); }
    double beta_dot(double t) const { return beta_dot_(t); }
    double t_f() const { return t_f_; }

    // Max relative mismatch between the stored derivatives and central
    // finite differences of the angle functions, over interior samples.
    double max_derivative_mismatch(int n_samples = 100) const;

private:
    std::function<double(double)> gamma_;
    std::function<double(double)> beta_;
    std::function<double(double)> gamma_dot_;
    std::function<double(double)> beta_dot_;
    double t_f_;
};

} // namespace lrpulse
