#include "lrpulse/protocols.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "lrpulse/errors.hpp"
#include "lrpulse/invariant.hpp"
#include "lrpulse/units.hpp"

namespace lrpulse {

const char* to_string(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::Protocol1: return "protocol1";
        case ProtocolKind::Protocol2: return "protocol2";
        case ProtocolKind::Protocol3: return "protocol3";
    }
    return "unknown";
}

void ProtocolSpec::validate() const {
    if (!(epsilon > 0.0) || !(epsilon < 0.5 * kPi)) {
        throw InvalidEpsilon("epsilon must lie in (0, pi/2); zero means infinite "
                             "Rabi frequencies and pi/2 kills the pulses");
    }
    if (!(t_f > 0.0)) {
        throw ValidationError("t_f must be positive");
    }
    if (kind == ProtocolKind::Protocol2) {
        if (!delta) {
            throw InvalidDelta("protocol 2 needs the midpoint angle delta");
        }
        if (!(*delta > 0.0) || !(*delta <= 0.5 * kPi)) {
            throw InvalidDelta("delta must lie in (0, pi/2]");
        }
    } else if (delta) {
        throw ValidationError("delta is only meaningful for protocol 2");
    }
    if (kind == ProtocolKind::Protocol3 && initial_state != InitialState::Bare1) {
        throw ValidationError("protocol 3 starts from the bare state |1>");
    }
}

ProtocolSpec ProtocolSpec::protocol1(double epsilon, double t_f, InitialState initial) {
    ProtocolSpec spec{ProtocolKind::Protocol1, epsilon, t_f, std::nullopt, initial};
    spec.validate();
    return spec;
}

ProtocolSpec ProtocolSpec::protocol2(double epsilon, double delta, double t_f,
                                     InitialState initial) {
    ProtocolSpec spec{ProtocolKind::Protocol2, epsilon, t_f, delta, initial};
    spec.validate();
    return spec;
}

ProtocolSpec ProtocolSpec::protocol3(double epsilon, double t_f) {
    ProtocolSpec spec{ProtocolKind::Protocol3, epsilon, t_f, std::nullopt,
                      InitialState::Bare1};
    spec.validate();
    return spec;
}

namespace {

double eval_poly(const double* coeffs, int n, double t) {
    double value = 0.0;
    for (int j = n - 1; j >= 0; --j) {
        value = value * t + coeffs[j];
    }
    return value;
}

double eval_poly_dot(const double* coeffs, int n, double t) {
    double value = 0.0;
    for (int j = n - 1; j >= 1; --j) {
        value = value * t + j * coeffs[j];
    }
    return value;
}

} // namespace

PolynomialAnsatz::PolynomialAnsatz(std::array<double, 5> a, std::array<double, 4> b,
                                   double t_f)
    : a_(a), b_(b), t_f_(t_f) {}

PolynomialAnsatz PolynomialAnsatz::solve(double epsilon, double delta, double t_f) {
    // Both systems are solved in s = t/t_f, where the monomial basis is
    // perfectly conditioned at degree <= 4, then rescaled to powers of t.
    Eigen::Matrix<double, 5, 5> ga = Eigen::Matrix<double, 5, 5>::Zero();
    Eigen::Matrix<double, 5, 1> gy;
    for (int j = 0; j < 5; ++j) {
        ga(0, j) = (j == 0) ? 1.0 : 0.0;             // gamma(0)
        ga(1, j) = (j == 1) ? 1.0 : 0.0;             // gamma'(0)
        ga(2, j) = 1.0;                              // gamma(1)
        ga(3, j) = j;                                // gamma'(1)
        ga(4, j) = std::pow(0.5, j);                 // gamma(1/2)
    }
    gy << epsilon, 0.0, epsilon, 0.0, delta;
    const Eigen::Matrix<double, 5, 1> gsol = ga.fullPivLu().solve(gy);

    Eigen::Matrix<double, 4, 4> ba = Eigen::Matrix<double, 4, 4>::Zero();
    Eigen::Matrix<double, 4, 1> by;
    for (int j = 0; j < 4; ++j) {
        ba(0, j) = (j == 0) ? 1.0 : 0.0;             // beta(0)
        ba(1, j) = (j == 1) ? 1.0 : 0.0;             // beta'(0)
        ba(2, j) = 1.0;                              // beta(1)
        ba(3, j) = j;                                // beta'(1)
    }
    by << 0.0, 0.0, 0.5 * kPi, 0.0;
    const Eigen::Matrix<double, 4, 1> bsol = ba.fullPivLu().solve(by);

    std::array<double, 5> a;
    std::array<double, 4> b;
    double scale = 1.0;
    for (int j = 0; j < 5; ++j) {
        a[j] = gsol(j) / scale;
        if (j < 4) b[j] = bsol(j) / scale;
        scale *= t_f;
    }
    return PolynomialAnsatz(a, b, t_f);
}

double PolynomialAnsatz::gamma(double t) const { return eval_poly(a_.data(), 5, t); }
double PolynomialAnsatz::gamma_dot(double t) const { return eval_poly_dot(a_.data(), 5, t); }
double PolynomialAnsatz::beta(double t) const { return eval_poly(b_.data(), 4, t); }
double PolynomialAnsatz::beta_dot(double t) const { return eval_poly_dot(b_.data(), 4, t); }

double PolynomialAnsatz::max_boundary_residual(double epsilon, double delta) const {
    double worst = 0.0;
    const auto track = [&worst](double residual) {
        worst = std::max(worst, std::abs(residual));
    };
    track(gamma(0.0) - epsilon);
    track(gamma_dot(0.0));
    track(gamma(t_f_) - epsilon);
    track(gamma_dot(t_f_));
    track(gamma(0.5 * t_f_) - delta);
    track(beta(0.0));
    track(beta_dot(0.0));
    track(beta(t_f_) - 0.5 * kPi);
    track(beta_dot(t_f_));
    return worst;
}

AngleTrajectory PolynomialAnsatz::trajectory() const {
    const PolynomialAnsatz self = *this;
    return AngleTrajectory([self](double t) { return self.gamma(t); },
                           [self](double t) { return self.beta(t); },
                           [self](double t) { return self.gamma_dot(t); },
                           [self](double t) { return self.beta_dot(t); },
                           t_f_);
}

PulseSchedule synthesize_pulses(const AngleTrajectory& angles) {
    const double t_f = angles.t_f();
    for (int i = 0; i <= kSingularityScanPoints; ++i) {
        const double t = t_f * static_cast<double>(i) / kSingularityScanPoints;
        if (std::abs(std::sin(angles.gamma(t))) < kSingularSinGamma) {
            throw SingularAngle("gamma(t) passes within 1e-6 of a multiple of pi at "
                                "t = " + std::to_string(t) + "; cot(gamma) diverges");
        }
    }
    auto omega_p = [angles](double t) {
        const double g = angles.gamma(t);
        const double b = angles.beta(t);
        return 2.0 * (angles.beta_dot(t) * std::cos(g) / std::sin(g) * std::sin(b) +
                      angles.gamma_dot(t) * std::cos(b));
    };
    auto omega_s = [angles](double t) {
        const double g = angles.gamma(t);
        const double b = angles.beta(t);
        return 2.0 * (angles.beta_dot(t) * std::cos(g) / std::sin(g) * std::cos(b) -
                      angles.gamma_dot(t) * std::sin(b));
    };
    return PulseSchedule(omega_p, omega_s, t_f);
}

Protocol1Design protocol1(double epsilon, double t_f) {
    ProtocolSpec::protocol1(epsilon, t_f); // parameter validation
    const double rate = 0.5 * kPi / t_f;
    AngleTrajectory angles([epsilon](double) { return epsilon; },
                           [rate](double t) { return rate * t; },
                           [](double) { return 0.0; },
                           [rate](double) { return rate; },
                           t_f);
    PulseSchedule pulses = synthesize_pulses(angles);
    return {std::move(angles), std::move(pulses)};
}

Protocol2Design protocol2(double epsilon, double delta, double t_f) {
    ProtocolSpec::protocol2(epsilon, delta, t_f);
    PolynomialAnsatz ansatz = PolynomialAnsatz::solve(epsilon, delta, t_f);
    if (ansatz.max_boundary_residual(epsilon, delta) > 1e-10) {
        throw NumericalError("polynomial boundary solve lost precision");
    }
    AngleTrajectory angles = ansatz.trajectory();
    PulseSchedule pulses = synthesize_pulses(angles);
    return {std::move(ansatz), std::move(angles), std::move(pulses)};
}

Protocol3Design protocol3(double epsilon, double t_f) {
    Protocol1Design base = protocol1(epsilon, t_f);
    return {std::move(base.angles), std::move(base.pulses), StateVector::bare1()};
}

double perfect_epsilon(int n) {
    if (n < 1) {
        throw ValidationError("mode index N must be a positive integer");
    }
    return std::asin(1.0 / (4.0 * n));
}

bool BoundaryReport::all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const BoundaryCondition& c) { return c.pass; });
}

int BoundaryReport::failures() const {
    return static_cast<int>(std::count_if(conditions.begin(), conditions.end(),
                                          [](const BoundaryCondition& c) { return !c.pass; }));
}

BoundaryReport validate_boundary_conditions(const AngleTrajectory& angles,
                                            const ProtocolSpec& spec) {
    constexpr double kTol = 1e-10;
    BoundaryReport report;
    report.tolerance = kTol;

    const double t_f = angles.t_f();
    auto add = [&report](const std::string& name, double expected, double actual) {
        const double residual = std::abs(actual - expected);
        report.conditions.push_back({name, expected, actual, residual, residual <= kTol});
    };

    add("gamma(0) = epsilon", spec.epsilon, angles.gamma(0.0));
    add("gamma(t_f) = epsilon", spec.epsilon, angles.gamma(t_f));
    add("gamma_dot(0) = 0", 0.0, angles.gamma_dot(0.0));
    add("gamma_dot(t_f) = 0", 0.0, angles.gamma_dot(t_f));
    add("beta(0) = 0", 0.0, angles.beta(0.0));
    add("beta(t_f) = pi/2", 0.5 * kPi, angles.beta(t_f));
    if (spec.kind == ProtocolKind::Protocol2) {
        add("gamma(t_f/2) = delta", *spec.delta, angles.gamma(0.5 * t_f));
        add("beta_dot(0) = 0", 0.0, angles.beta_dot(0.0));
        add("beta_dot(t_f) = 0", 0.0, angles.beta_dot(t_f));
    }
    return report;
}

DesignResult design(const ProtocolSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ProtocolKind::Protocol1: {
            Protocol1Design d = protocol1(spec.epsilon, spec.t_f);
            StateVector initial =
                spec.initial_state == InitialState::Bare1
                    ? StateVector::bare1()
                    : invariant_eigenstates(d.angles.gamma(0.0), d.angles.beta(0.0)).phi_zero;
            return {spec, std::move(d.angles), std::move(d.pulses), std::move(initial),
                    std::nullopt};
        }
        case ProtocolKind::Protocol2: {
            Protocol2Design d = protocol2(spec.epsilon, *spec.delta, spec.t_f);
            StateVector initial =
                spec.initial_state == InitialState::Bare1
                    ? StateVector::bare1()
                    : invariant_eigenstates(d.angles.gamma(0.0), d.angles.beta(0.0)).phi_zero;
            return {spec, std::move(d.angles), std::move(d.pulses), std::move(initial),
                    std::move(d.ansatz)};
        }
        case ProtocolKind::Protocol3: {
            Protocol3Design d = protocol3(spec.epsilon, spec.t_f);
            return {spec, std::move(d.angles), std::move(d.pulses),
                    std::move(d.initial_state), std::nullopt};
        }
    }
    throw ValidationError("unknown protocol kind");
}

} // namespace lrpulse
