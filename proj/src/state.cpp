#include "lrpulse/state.hpp"

#include <cmath>

#include "lrpulse/errors.hpp"

namespace lrpulse {

StateVector::StateVector(const Eigen::Vector3cd& amplitudes) : amps_(amplitudes) {
    const double norm_sq = amps_.squaredNorm();
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        throw NormalizationError("state vector norm^2 = " + std::to_string(norm_sq) +
                                 " is not 1 within 1e-12");
    }
}

StateVector StateVector::bare1() { return StateVector(Eigen::Vector3cd(1.0, 0.0, 0.0)); }
StateVector StateVector::bare2() { return StateVector(Eigen::Vector3cd(0.0, 1.0, 0.0)); }
StateVector StateVector::bare3() { return StateVector(Eigen::Vector3cd(0.0, 0.0, 1.0)); }
StateVector StateVector::target_minus3() {
    return StateVector(Eigen::Vector3cd(0.0, 0.0, -1.0));
}

std::array<double, 3> StateVector::populations() const {
    return {std::norm(amps_(0)), std::norm(amps_(1)), std::norm(amps_(2))};
}

} // namespace lrpulse
