#pragma once

#include <functional>

#include "lrpulse/operators.hpp"

namespace lrpulse {

// Pump/Stokes Rabi frequencies on [0, t_f], in rad/us, plus optional
// static detunings entering only the propagation Hamiltonian.
class PulseSchedule {
public:
    PulseSchedule(std::function<double(double)> omega_p,
                  std::function<double(double)> omega_s,
                  double t_f, double delta_p = 0.0, double delta_3 = 0.0);

    double omega_p(double t) const { return omega_p_(t); }
    double omega_s(double t) const { return omega_s_(t); }
    double rabi_rms(double t) const;

    double t_f() const { return t_f_; }
    double delta_p() const { return delta_p_; }
    double delta_3() const { return delta_3_; }
    bool resonant() const { return delta_p_ == 0.0 && delta_3_ == 0.0; }

    HermitianOperator3 hamiltonian(double t) const;

    PulseSchedule with_detunings(double delta_p, double delta_3) const;

    // Time dilation: same instantaneous amplitudes played over
    // factor * t_f. Slows the mixing-angle sweep without touching the
    // Rabi scale, which is what the adiabatic limit asks for.
    PulseSchedule stretched(double factor) const;

private:
    std::function<double(double)> omega_p_;
    std::function<double(double)> omega_s_;
    double t_f_;
    double delta_p_;
    double delta_3_;
};

} // namespace lrpulse
