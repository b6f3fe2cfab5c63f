#include "lrpulse/invariant.hpp"

#include <cmath>

#include "lrpulse/errors.hpp"
#include "lrpulse/quadrature.hpp"

namespace lrpulse {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

HermitianOperator3 invariant_matrix(double gamma, double beta, double omega_0) {
    const double cg = std::cos(gamma);
    const double sg = std::sin(gamma);
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);

    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(0, 1) = cg * sb;
    m(1, 0) = cg * sb;
    m(0, 2) = -kI * sg;
    m(2, 0) = kI * sg;
    m(1, 2) = cg * cb;
    m(2, 1) = cg * cb;
    return HermitianOperator3(0.5 * omega_0 * m);
}

InvariantEigenstates invariant_eigenstates(double gamma, double beta) {
    const double cg = std::cos(gamma);
    const double sg = std::sin(gamma);
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    const Eigen::Vector3cd phi0(cg * cb, -kI * sg, -cg * sb);
    const Eigen::Vector3cd phi_plus =
        inv_sqrt2 * Eigen::Vector3cd(sg * cb + kI * sb, kI * cg, -sg * sb + kI * cb);
    const Eigen::Vector3cd phi_minus =
        inv_sqrt2 * Eigen::Vector3cd(sg * cb - kI * sb, kI * cg, -sg * sb - kI * cb);

    return {StateVector(phi0), StateVector(phi_plus), StateVector(phi_minus)};
}

InvariantFrame invariant_frame(double gamma, double beta, double omega_0) {
    return {invariant_matrix(gamma, beta, omega_0),
            invariant_eigenstates(gamma, beta), omega_0};
}

double commutator_defect(const HermitianOperator3& a, const HermitianOperator3& b) {
    return commutator(a.matrix(), b.matrix()).norm();
}

double lr_phase(Mode mode, const AngleTrajectory& angles,
                const PulseSchedule& pulses, double t) {
    if (mode == Mode::Zero) {
        return 0.0;
    }
    auto integrand = [&](double u) {
        const double g = angles.gamma(u);
        const double b = angles.beta(u);
        return angles.beta_dot(u) * std::sin(g) +
               0.5 * (pulses.omega_p(u) * std::sin(b) + pulses.omega_s(u) * std::cos(b)) *
                   std::cos(g);
    };
    const double value = integrate(integrand, 0.0, t);
    return mode == Mode::Plus ? -value : value;
}

double ModeDecomposition::total_population() const {
    return std::norm(c_zero) + std::norm(c_plus) + std::norm(c_minus);
}

ModeDecomposition decompose(const Eigen::Vector3cd& state, double gamma, double beta) {
    const InvariantEigenstates basis = invariant_eigenstates(gamma, beta);
    ModeDecomposition d;
    d.c_zero = basis.phi_zero.amplitudes().dot(state);
    d.c_plus = basis.phi_plus.amplitudes().dot(state);
    d.c_minus = basis.phi_minus.amplitudes().dot(state);
    return d;
}

ModeDecomposition decompose(const StateVector& state, double gamma, double beta) {
    return decompose(state.amplitudes(), gamma, beta);
}

double invariance_defect(const AngleTrajectory& angles, const PulseSchedule& pulses,
                         double t, double omega_0) {
    const double h = 1e-6 * angles.t_f();
    const auto at = [&](double u) {
        return invariant_matrix(angles.gamma(u), angles.beta(u), omega_0).matrix();
    };
    const Eigen::Matrix3cd explicit_part = (at(t + h) - at(t - h)) / (2.0 * h);
    const Eigen::Matrix3cd h_matrix = pulses.hamiltonian(t).matrix();
    const Eigen::Matrix3cd total =
        explicit_part + commutator(at(t), h_matrix) / (kI);
    return total.norm();
}

} // namespace lrpulse
