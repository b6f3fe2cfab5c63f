#pragma once

#include <complex>

#include "lrpulse/angles.hpp"
#include "lrpulse/operators.hpp"
#include "lrpulse/pulses.hpp"
#include "lrpulse/state.hpp"

namespace lrpulse {

// Dynamical invariant of the resonant Hamiltonian,
//   I = (omega_0/2)(cos g sin b K1 + cos g cos b K2 + sin g K3),
// hbar = 1. omega_0 is an arbitrary frequency scale kept for units.
HermitianOperator3 invariant_matrix(double gamma, double beta, double omega_0);

// Eigenvectors of the invariant, in a fixed phase convention so that
// overlaps with them have deterministic phases. Eigenvalues are
// 0 and +/- omega_0/2.
struct InvariantEigenstates {
    StateVector phi_zero;
    StateVector phi_plus;
    StateVector phi_minus;
};

InvariantEigenstates invariant_eigenstates(double gamma, double beta);

struct InvariantFrame {
    HermitianOperator3 matrix;
    InvariantEigenstates eigenstates;
    double omega_0;
};

InvariantFrame invariant_frame(double gamma, double beta, double omega_0 = 1.0);

// Frobenius norm of [A, B]; zero iff the operators commute.
double commutator_defect(const HermitianOperator3& a, const HermitianOperator3& b);

enum class Mode { Zero, Plus, Minus };

// Lewis-Riesenfeld phase alpha_n(t) accumulated by mode n up to time t.
// alpha_0 vanishes identically; alpha_+ = -alpha_-. Computed by adaptive
// quadrature of the closed-form integrand, so angles and pulses must
// belong to the same design.
double lr_phase(Mode mode, const AngleTrajectory& angles,
                const PulseSchedule& pulses, double t);

struct ModeDecomposition {
    std::complex<double> c_zero;
    std::complex<double> c_plus;
    std::complex<double> c_minus;
    double alpha_zero = 0.0;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;

    double total_population() const;
};

// Projects a state onto the invariant eigenbasis at angles (gamma, beta).
// Phases are left at zero; lr_phase fills them when needed. The raw
// overload accepts propagated samples, whose norm may have drifted.
ModeDecomposition decompose(const StateVector& state, double gamma, double beta);
ModeDecomposition decompose(const Eigen::Vector3cd& state, double gamma, double beta);

// Norm of dI/dt = dI/dt|_explicit + (1/i)[I, H] at time t, with the
// explicit part taken by central finite difference. Vanishes (up to the
// difference stencil) when the pulses were synthesized from the angles.
double invariance_defect(const AngleTrajectory& angles, const PulseSchedule& pulses,
                         double t, double omega_0 = 1.0);

} // namespace lrpulse
