#include "lrpulse/pulses.hpp"

#include <cmath>
#include <utility>

#include "lrpulse/errors.hpp"

namespace lrpulse {

PulseSchedule::PulseSchedule(std::function<double(double)> omega_p,
                             std::function<double(double)> omega_s,
                             double t_f, double delta_p, double delta_3)
    : omega_p_(std::move(omega_p)),
      omega_s_(std::move(omega_s)),
      t_f_(t_f),
      delta_p_(delta_p),
      delta_3_(delta_3) {
    if (!(t_f_ > 0.0)) {
        throw ValidationError("pulse duration must be positive");
    }
    if (!std::isfinite(delta_p_) || !std::isfinite(delta_3_)) {
        throw ValidationError("detunings must be finite");
    }
}

double PulseSchedule::rabi_rms(double t) const {
    return std::hypot(omega_p_(t), omega_s_(t));
}

HermitianOperator3 PulseSchedule::hamiltonian(double t) const {
    if (resonant()) {
        return hamiltonian_resonant(omega_p_(t), omega_s_(t));
    }
    return hamiltonian_detuned(omega_p_(t), omega_s_(t), delta_p_, delta_3_);
}

PulseSchedule PulseSchedule::with_detunings(double delta_p, double delta_3) const {
    return PulseSchedule(omega_p_, omega_s_, t_f_, delta_p, delta_3);
}

PulseSchedule PulseSchedule::stretched(double factor) const {
    if (!(factor > 0.0)) {
        throw ValidationError("stretch factor must be positive");
    }
    auto op = omega_p_;
    auto os = omega_s_;
    return PulseSchedule([op, factor](double t) { return op(t / factor); },
                         [os, factor](double t) { return os(t / factor); },
                         factor * t_f_, delta_p_, delta_3_);
}

} // namespace lrpulse
