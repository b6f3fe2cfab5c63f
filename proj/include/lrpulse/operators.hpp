#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace lrpulse {

inline constexpr double kHermiticityTolerance = 1e-14;

// 3x3 Hermitian matrix. Hamiltonians carry units of angular frequency
// (hbar = 1); the K operators are dimensionless.
class HermitianOperator3 {
public:
    explicit HermitianOperator3(const Eigen::Matrix3cd& m);

    const Eigen::Matrix3cd& matrix() const { return m_; }

private:
    Eigen::Matrix3cd m_;
};

struct Spin1Operators {
    HermitianOperator3 k1;
    HermitianOperator3 k2;
    HermitianOperator3 k3;
};

// The spin-1 angular momentum triple with [K1,K2] = iK3 and cyclic.
const Spin1Operators& spin1_operators();

// H = (1/2)(omega_p K1 + omega_s K2). Zero diagonal, no 1-3 coupling.
HermitianOperator3 hamiltonian_resonant(double omega_p, double omega_s);

// Full RWA Hamiltonian with one-photon detunings on the diagonal.
// Reduces to hamiltonian_resonant when both detunings vanish.
HermitianOperator3 hamiltonian_detuned(double omega_p, double omega_s,
                                       double delta_p, double delta_3);

// Instantaneous eigensystem of the resonant Hamiltonian.
struct AdiabaticFrame {
    double theta;     // mixing angle, tan(theta) = omega_p/omega_s
    double omega_rms; // sqrt(omega_p^2 + omega_s^2)
    std::array<double, 3> eigenvalues; // {0, +omega_rms/2, -omega_rms/2}
    Eigen::Vector3d n_zero;            // dark state (cos, 0, -sin)
    Eigen::Vector3d n_plus;
    Eigen::Vector3d n_minus;
};

// Throws DegeneratePulse when both Rabi frequencies are zero.
AdiabaticFrame adiabatic_frame(double omega_p, double omega_s);

// |theta_dot| / omega_rms; small values mean adiabatic driving.
double adiabaticity_ratio(double theta_dot, double omega_rms);

Eigen::Matrix3cd commutator(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b);

// Removes 2*pi jumps from a sampled angle series (first element kept).
std::vector<double> unwrap_angles(std::vector<double> angles);

} // namespace lrpulse
