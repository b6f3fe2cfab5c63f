#include "lrpulse/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "lrpulse/errors.hpp"
#include "lrpulse/quadrature.hpp"
#include "lrpulse/units.hpp"

namespace lrpulse {

std::complex<double> fidelity(const Eigen::Vector3cd& final_state) {
    // <-3|Psi> with |-3> = (0, 0, -1).
    return -final_state(2);
}

std::complex<double> fidelity(const StateVector& final_state) {
    return fidelity(final_state.amplitudes());
}

double avg_rabi(const PulseSchedule& pulses) {
    const double integral = integrate(
        [&pulses](double t) { return pulses.rabi_rms(t); }, 0.0, pulses.t_f());
    return integral / pulses.t_f();
}

double energy_cost(const PulseSchedule& pulses) {
    return integrate(
        [&pulses](double t) {
            const double p = pulses.omega_p(t);
            const double s = pulses.omega_s(t);
            return p * p + s * s;
        },
        0.0, pulses.t_f());
}

double protocol3_fidelity_closed(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5 * kPi)) {
        throw InvalidEpsilon("epsilon must lie in (0, pi/2)");
    }
    const double s = std::sin(epsilon);
    return 1.0 - s * s * (1.0 - std::cos(0.5 * kPi / s));
}

SensitivityReport sensitivity_closed(double epsilon, double t, double t_f) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5 * kPi)) {
        throw InvalidEpsilon("epsilon must lie in (0, pi/2)");
    }
    const double s = std::sin(epsilon);
    const double scale = -kPi / (t_f * s * s);
    const double phase = 0.5 * kPi * t / t_f;
    return {scale * std::cos(phase), scale * std::sin(phase), -s};
}

RunMetrics compute_metrics(const PulseSchedule& pulses, const Trajectory& trajectory) {
    RunMetrics m;
    m.fidelity = fidelity(trajectory.final_state());
    m.fidelity_mag = std::abs(m.fidelity);
    m.avg_rabi = avg_rabi(pulses);
    m.energy_cost = energy_cost(pulses);
    m.peak_p2 = trajectory.peak_population2();
    m.norm_drift = trajectory.max_norm_drift();

    double peak = 0.0;
    constexpr int kScan = 4000;
    for (int i = 0; i <= kScan; ++i) {
        const double t = pulses.t_f() * static_cast<double>(i) / kScan;
        peak = std::max(peak, pulses.rabi_rms(t));
    }
    m.peak_rabi = peak;
    return m;
}

RunResult run(const RunSetup& setup) {
    DesignResult d = design(setup.protocol);
    PulseSchedule pulses = (setup.delta_p != 0.0 || setup.delta_3 != 0.0)
                               ? d.pulses.with_detunings(setup.delta_p, setup.delta_3)
                               : d.pulses;
    const TimeGrid grid(setup.n_steps, setup.protocol.t_f, setup.sample_stride);
    Trajectory traj = propagate(pulses, d.initial_state, grid);
    RunMetrics metrics = compute_metrics(pulses, traj);
    return {std::move(d), std::move(traj), metrics};
}

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Epsilon: return "epsilon";
        case SweepAxis::Delta: return "delta";
        case SweepAxis::TFinal: return "tf_us";
        case SweepAxis::DetuningP: return "delta_p";
        case SweepAxis::Detuning3: return "delta_3";
    }
    return "unknown";
}

std::optional<SweepAxis> sweep_axis_from_string(const std::string& name) {
    if (name == "epsilon") return SweepAxis::Epsilon;
    if (name == "delta") return SweepAxis::Delta;
    if (name == "tf_us" || name == "tf") return SweepAxis::TFinal;
    if (name == "delta_p" || name == "detuning-p") return SweepAxis::DetuningP;
    if (name == "delta_3" || name == "detuning-3") return SweepAxis::Detuning3;
    return std::nullopt;
}

bool SweepTable::any_failed() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const SweepRow& r) { return !r.error.empty(); });
}

SweepTable sweep(const RunSetup& base, SweepAxis axis, const std::vector<double>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw ValidationError("sweep values must be strictly increasing");
        }
    }

    SweepTable table;
    table.axis = to_string(axis);
    table.rows.reserve(values.size());

    for (const double value : values) {
        SweepRow row;
        row.value = value;
        try {
            RunSetup setup = base;
            switch (axis) {
                case SweepAxis::Epsilon: setup.protocol.epsilon = value; break;
                case SweepAxis::Delta: setup.protocol.delta = value; break;
                case SweepAxis::TFinal: setup.protocol.t_f = value; break;
                case SweepAxis::DetuningP: setup.delta_p = value; break;
                case SweepAxis::Detuning3: setup.delta_3 = value; break;
            }
            setup.protocol.validate();
            row.metrics = run(setup).metrics;
        } catch (const Error& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<double> linspace(double first, double last, int n) {
    if (n < 2 || !(last > first)) {
        throw ValidationError("linspace needs n >= 2 and last > first");
    }
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
        values[i] = first + (last - first) * static_cast<double>(i) / (n - 1);
    }
    values.back() = last;
    return values;
}

} // namespace lrpulse
