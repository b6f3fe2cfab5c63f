#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace lrpulse {

inline constexpr double kNormTolerance = 1e-12;

// Normalized amplitude vector over the bare basis {|1>, |2>, |3>}.
class StateVector {
public:
    explicit StateVector(const Eigen::Vector3cd& amplitudes);

    static StateVector bare1();
    static StateVector bare2();
    static StateVector bare3();
    // (0, 0, -1)^T, the target of the transfer protocols.
    static StateVector target_minus3();

    const Eigen::Vector3cd& amplitudes() const { return amps_; }
    std::complex<double> c1() const { return amps_(0); }
    std::complex<double> c2() const { return amps_(1); }
    std::complex<double> c3() const { return amps_(2); }

    std::array<double, 3> populations() const;

private:
    Eigen::Vector3cd amps_;
};

} // namespace lrpulse
