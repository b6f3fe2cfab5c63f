#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lrpulse/propagator.hpp"
#include "lrpulse/protocols.hpp"

namespace lrpulse {

struct RunMetrics {
    std::complex<double> fidelity;  // <-3|Psi(t_f)>
    double fidelity_mag = 0.0;
    double avg_rabi = 0.0;     // (1/t_f) integral of rms Rabi frequency
    double energy_cost = 0.0;  // integral of (omega_s^2 + omega_p^2), no 1/t_f
    double peak_p2 = 0.0;
    double peak_rabi = 0.0;
    double norm_drift = 0.0;
};

// Overlap with the target (0,0,-1); modulus and phase both meaningful.
std::complex<double> fidelity(const Eigen::Vector3cd& final_state);
std::complex<double> fidelity(const StateVector& final_state);

// Time-averaged rms Rabi frequency. Equals (pi/t_f) cot(eps) for the
// Protocol-1 envelopes.
double avg_rabi(const PulseSchedule& pulses);

// Integrated squared Rabi frequency, (pi^2/t_f) cot^2(eps) for
// Protocol 1. Despite the "time-averaged" name this carries no 1/t_f
// factor; the reference operating points below assume none.
double energy_cost(const PulseSchedule& pulses);

// Closed-form multi-mode transfer fidelity from |1>:
//   F = 1 - sin^2(eps) (1 - cos(pi / (2 sin eps))),
// equal to 1 exactly when 1/sin(eps) = 4N.
double protocol3_fidelity_closed(double epsilon);

// Parameter sensitivities of the Protocol-1 design at fixed t.
// The pump and Stokes derivatives share the -pi/(t_f sin^2 eps) scale
// but keep their own quadrature envelopes (cos for Stokes, sin for
// pump); collapsing them onto one envelope is wrong for the pump.
struct SensitivityReport {
    double d_omega_s_d_eps;
    double d_omega_p_d_eps;
    double d_fidelity_d_eps;  // -sin(eps)
};

SensitivityReport sensitivity_closed(double epsilon, double t, double t_f);

struct RunSetup {
    ProtocolSpec protocol;
    double delta_p = 0.0;
    double delta_3 = 0.0;
    int n_steps = kDefaultSteps;
    int sample_stride = kDefaultStride;
};

struct RunResult {
    DesignResult design;
    Trajectory trajectory;
    RunMetrics metrics;
};

// Full pipeline: design, propagate, score.
RunResult run(const RunSetup& setup);

RunMetrics compute_metrics(const PulseSchedule& pulses, const Trajectory& trajectory);

enum class SweepAxis { Epsilon, Delta, TFinal, DetuningP, Detuning3 };

const char* to_string(SweepAxis axis);
std::optional<SweepAxis> sweep_axis_from_string(const std::string& name);

struct SweepRow {
    double value = 0.0;
    std::optional<RunMetrics> metrics;
    std::string error;  // empty when the row succeeded
};

struct SweepTable {
    std::string axis;
    std::vector<SweepRow> rows;

    bool any_failed() const;
};

// One full run per axis value; per-row failures are recorded in the row
// and the sweep continues. Values must be strictly increasing.
SweepTable sweep(const RunSetup& base, SweepAxis axis, const std::vector<double>& values);

std::vector<double> linspace(double first, double last, int n);

} // namespace lrpulse
