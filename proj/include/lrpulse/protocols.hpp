#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lrpulse/angles.hpp"
#include "lrpulse/pulses.hpp"
#include "lrpulse/state.hpp"

namespace lrpulse {

enum class ProtocolKind { Protocol1, Protocol2, Protocol3 };
enum class InitialState { InvariantMode0, Bare1 };

const char* to_string(ProtocolKind kind);

// Validated protocol parameters.
//   epsilon in (0, pi/2): the residual invariant angle at the endpoints.
//   delta in (0, pi/2]:   midpoint angle, Protocol 2 only.
// Protocol 3 reuses the Protocol-1 pulse shapes with |1> as the initial
// state, so initial_state is forced to Bare1 there.
struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::Protocol1;
    double epsilon = 0.0;
    double t_f = 0.0;
    std::optional<double> delta;
    InitialState initial_state = InitialState::InvariantMode0;

    void validate() const;

    static ProtocolSpec protocol1(double epsilon, double t_f,
                                  InitialState initial = InitialState::InvariantMode0);
    static ProtocolSpec protocol2(double epsilon, double delta, double t_f,
                                  InitialState initial = InitialState::InvariantMode0);
    static ProtocolSpec protocol3(double epsilon, double t_f);
};

// Quartic gamma / cubic beta interpolation of the Protocol-2 boundary
// conditions. Coefficients are stored for powers of t (not t/t_f).
class PolynomialAnsatz {
public:
    // Solves the two boundary-value systems; epsilon at the ends,
    // delta at t_f/2, flat gamma and beta endpoints.
    static PolynomialAnsatz solve(double epsilon, double delta, double t_f);

    double gamma(double t) const;
    double gamma_dot(double t) const;
    double beta(double t) const;
    double beta_dot(double t) const;

    const std::array<double, 5>& gamma_coeffs() const { return a_; }
    const std::array<double, 4>& beta_coeffs() const { return b_; }
    double t_f() const { return t_f_; }

    // Largest residual of the nine boundary conditions the coefficients
    // were solved for.
    double max_boundary_residual(double epsilon, double delta) const;

    AngleTrajectory trajectory() const;

private:
    PolynomialAnsatz(std::array<double, 5> a, std::array<double, 4> b, double t_f);

    std::array<double, 5> a_;
    std::array<double, 4> b_;
    double t_f_;
};

// Inverse step: pump/Stokes pulses that make (gamma, beta) solve the
// auxiliary equations. Scans for |sin gamma| < 1e-6 and refuses to
// synthesize across the cot-gamma singularity.
PulseSchedule synthesize_pulses(const AngleTrajectory& angles);

inline constexpr double kSingularSinGamma = 1e-6;
inline constexpr int kSingularityScanPoints = 10000;

struct Protocol1Design {
    AngleTrajectory angles;
    PulseSchedule pulses;
};

// gamma = epsilon, beta = (pi/2) t/t_f. Pulses come out as quarter-wave
// sine/cosine envelopes of amplitude (pi/t_f) cot(epsilon).
Protocol1Design protocol1(double epsilon, double t_f);

struct Protocol2Design {
    PolynomialAnsatz ansatz;
    AngleTrajectory angles;
    PulseSchedule pulses;
};

// Polynomial angles through gamma(t_f/2) = delta; both pulses vanish at
// t = 0 and t = t_f.
Protocol2Design protocol2(double epsilon, double delta, double t_f);

struct Protocol3Design {
    AngleTrajectory angles;
    PulseSchedule pulses;
    StateVector initial_state;
};

// Protocol-1 pulses driving the bare state |1> (multi-mode evolution).
Protocol3Design protocol3(double epsilon, double t_f);

// Endpoint angles for which the multi-mode transfer is exactly perfect:
// arcsin(1/(4N)).
double perfect_epsilon(int n);

struct BoundaryCondition {
    std::string name;
    double expected;
    double actual;
    double residual;
    bool pass;
};

struct BoundaryReport {
    std::vector<BoundaryCondition> conditions;
    double tolerance;

    bool all_pass() const;
    int failures() const;
};

// Residuals of the protocol's boundary conditions at 1e-10 each:
// six conditions for Protocols 1/3, nine for Protocol 2.
BoundaryReport validate_boundary_conditions(const AngleTrajectory& angles,
                                            const ProtocolSpec& spec);

struct DesignResult {
    ProtocolSpec spec;
    AngleTrajectory angles;
    PulseSchedule pulses;
    StateVector initial_state;
    std::optional<PolynomialAnsatz> ansatz;
};

// Builds the full design for any protocol, including the initial state
// implied by spec.initial_state.
DesignResult design(const ProtocolSpec& spec);

} // namespace lrpulse
