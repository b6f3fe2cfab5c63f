#include "lrpulse/operators.hpp"

#include <cmath>
#include <complex>

#include "lrpulse/errors.hpp"
#include "lrpulse/units.hpp"

namespace lrpulse {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

HermitianOperator3::HermitianOperator3(const Eigen::Matrix3cd& m) : m_(m) {
    const double defect = (m_ - m_.adjoint().eval()).cwiseAbs().maxCoeff();
    if (defect > kHermiticityTolerance) {
        throw ValidationError("matrix is not Hermitian: max |M - M^dag| = " +
                              std::to_string(defect));
    }
}

const Spin1Operators& spin1_operators() {
    static const Spin1Operators ops = [] {
        Eigen::Matrix3cd k1 = Eigen::Matrix3cd::Zero();
        k1(0, 1) = 1.0;
        k1(1, 0) = 1.0;

        Eigen::Matrix3cd k2 = Eigen::Matrix3cd::Zero();
        k2(1, 2) = 1.0;
        k2(2, 1) = 1.0;

        Eigen::Matrix3cd k3 = Eigen::Matrix3cd::Zero();
        k3(0, 2) = -kI;
        k3(2, 0) = kI;

        return Spin1Operators{HermitianOperator3(k1), HermitianOperator3(k2),
                              HermitianOperator3(k3)};
    }();
    return ops;
}

HermitianOperator3 hamiltonian_resonant(double omega_p, double omega_s) {
    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    h(0, 1) = 0.5 * omega_p;
    h(1, 0) = 0.5 * omega_p;
    h(1, 2) = 0.5 * omega_s;
    h(2, 1) = 0.5 * omega_s;
    return HermitianOperator3(h);
}

HermitianOperator3 hamiltonian_detuned(double omega_p, double omega_s,
                                       double delta_p, double delta_3) {
    Eigen::Matrix3cd h = hamiltonian_resonant(omega_p, omega_s).matrix();
    h(1, 1) = delta_p;
    h(2, 2) = delta_3;
    return HermitianOperator3(h);
}

AdiabaticFrame adiabatic_frame(double omega_p, double omega_s) {
    const double omega = std::hypot(omega_p, omega_s);
    if (omega == 0.0) {
        throw DegeneratePulse("both Rabi frequencies are zero; mixing angle undefined");
    }
    const double theta = std::atan2(omega_p, omega_s);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    AdiabaticFrame frame;
    frame.theta = theta;
    frame.omega_rms = omega;
    frame.eigenvalues = {0.0, 0.5 * omega, -0.5 * omega};
    frame.n_zero = Eigen::Vector3d(ct, 0.0, -st);
    frame.n_plus = inv_sqrt2 * Eigen::Vector3d(st, 1.0, ct);
    frame.n_minus = inv_sqrt2 * Eigen::Vector3d(st, -1.0, ct);
    return frame;
}

double adiabaticity_ratio(double theta_dot, double omega_rms) {
    if (omega_rms == 0.0) {
        throw DegeneratePulse("adiabaticity ratio undefined at zero Rabi frequency");
    }
    return std::abs(theta_dot) / std::abs(omega_rms);
}

Eigen::Matrix3cd commutator(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b) {
    return a * b - b * a;
}

std::vector<double> unwrap_angles(std::vector<double> angles) {
    for (std::size_t i = 1; i < angles.size(); ++i) {
        const double raw_step = angles[i] - angles[i - 1];
        const double step = raw_step - kTwoPi * std::round(raw_step / kTwoPi);
        angles[i] = angles[i - 1] + step;
    }
    return angles;
}

} // namespace lrpulse
