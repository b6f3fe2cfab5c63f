#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lrpulse/pulses.hpp"
#include "lrpulse/state.hpp"

namespace lrpulse {

struct TimeGrid {
    // Throws ValidationError unless n_steps >= 100 and stride >= 1.
    TimeGrid(int n_steps, double t_f, int sample_stride = 10);

    int n_steps;
    double t_f;
    int sample_stride;

    double dt() const { return t_f / n_steps; }
};

inline constexpr int kDefaultSteps = 4000;
inline constexpr int kDefaultStride = 10;

// Sampled solution of the Schrodinger equation. States keep their raw
// norm; drift away from 1 is a diagnostic, not something to hide.
struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::Vector3cd> states;
    std::vector<std::array<double, 3>> populations;

    const Eigen::Vector3cd& final_state() const { return states.back(); }
    double max_norm_drift() const;
    double peak_population2() const;

    // Index of the sample at time t, if t landed on the sample grid.
    std::optional<std::size_t> index_at_time(double t, double tol = 1e-9) const;
};

// Fixed-step integrator. Each step composes two exponentials of
// Hermitian combinations of H at the two-point Gauss nodes (a
// commutator-free fourth-order scheme), computed via the closed-form
// eigenstructure on resonance and a Hermitian eigensolve off resonance.
// Every step is exactly unitary; accuracy is set by the time sampling
// of H alone.
Trajectory propagate(const PulseSchedule& pulses, const StateVector& initial,
                     const TimeGrid& grid);

// Step-halving estimate: max amplitude deviation between runs with
// n_steps and 2*n_steps at the common sample times.
double convergence_check(const PulseSchedule& pulses, const StateVector& initial,
                         const TimeGrid& grid);

// propagate, then fail with StepSizeError if the step-halving estimate
// exceeds tolerance.
Trajectory propagate_checked(const PulseSchedule& pulses, const StateVector& initial,
                             const TimeGrid& grid, double tolerance);

// One resonant step exp(-i H dt), H = (1/2)(omega_p K1 + omega_s K2).
Eigen::Matrix3cd resonant_step_unitary(double omega_p, double omega_s, double dt);

} // namespace lrpulse
