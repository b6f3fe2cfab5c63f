#include "lrpulse/propagator.hpp"

#include <cmath>
#include <complex>

#include "lrpulse/errors.hpp"

namespace lrpulse {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

TimeGrid::TimeGrid(int n_steps_, double t_f_, int sample_stride_)
    : n_steps(n_steps_), t_f(t_f_), sample_stride(sample_stride_) {
    if (n_steps < 100) {
        throw ValidationError("time grid needs at least 100 steps");
    }
    if (!(t_f > 0.0)) {
        throw ValidationError("grid duration must be positive");
    }
    if (sample_stride < 1) {
        throw ValidationError("sample stride must be positive");
    }
}

double Trajectory::max_norm_drift() const {
    double worst = 0.0;
    for (const auto& s : states) {
        worst = std::max(worst, std::abs(s.norm() - 1.0));
    }
    return worst;
}

double Trajectory::peak_population2() const {
    double peak = 0.0;
    for (const auto& p : populations) {
        peak = std::max(peak, p[1]);
    }
    return peak;
}

std::optional<std::size_t> Trajectory::index_at_time(double t, double tol) const {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::abs(times[i] - t) <= tol) return i;
    }
    return std::nullopt;
}

Eigen::Matrix3cd resonant_step_unitary(double omega_p, double omega_s, double dt) {
    const double omega = std::hypot(omega_p, omega_s);
    if (omega == 0.0) {
        return Eigen::Matrix3cd::Identity();
    }
    const double p = omega_p / omega;
    const double q = omega_s / omega;
    const double phi = 0.5 * omega * dt;
    const double c = std::cos(phi);
    const double s = std::sin(phi);

    // exp(-i H dt) assembled from the dark/bright projectors; exactly
    // unitary for any step size.
    Eigen::Matrix3cd u;
    u(0, 0) = q * q + p * p * c;
    u(0, 1) = -kI * p * s;
    u(0, 2) = p * q * (c - 1.0);
    u(1, 0) = -kI * p * s;
    u(1, 1) = c;
    u(1, 2) = -kI * q * s;
    u(2, 0) = p * q * (c - 1.0);
    u(2, 1) = -kI * q * s;
    u(2, 2) = p * p + q * q * c;
    return u;
}

namespace {

Eigen::Matrix3cd hermitian_step_unitary(const Eigen::Matrix3cd& h, double dt) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(h);
    const Eigen::Vector3d evals = es.eigenvalues();
    const Eigen::Matrix3cd evecs = es.eigenvectors();
    Eigen::Vector3cd phases;
    for (int k = 0; k < 3; ++k) {
        phases(k) = std::exp(-kI * evals(k) * dt);
    }
    return evecs * phases.asDiagonal() * evecs.adjoint();
}

// Fourth-order commutator-free exponential step on the two-point Gauss
// nodes. Both factors are exponentials of Hermitian combinations, so the
// step stays exactly unitary; the earlier node gets the larger weight in
// the factor applied first.
constexpr double kGaussOffset = 0.288675134594813; // sqrt(3)/6
constexpr double kCf4WeightSmall = 0.25 - kGaussOffset;
constexpr double kCf4WeightLarge = 0.25 + kGaussOffset;

} // namespace

Trajectory propagate(const PulseSchedule& pulses, const StateVector& initial,
                     const TimeGrid& grid) {
    const double dt = grid.dt();
    const bool resonant = pulses.resonant();

    Trajectory traj;
    const std::size_t approx_samples = grid.n_steps / grid.sample_stride + 2;
    traj.times.reserve(approx_samples);
    traj.states.reserve(approx_samples);
    traj.populations.reserve(approx_samples);

    Eigen::Vector3cd psi = initial.amplitudes();
    auto record = [&](int step) {
        traj.times.push_back(step * dt);
        traj.states.push_back(psi);
        traj.populations.push_back({std::norm(psi(0)), std::norm(psi(1)), std::norm(psi(2))});
    };

    record(0);
    for (int step = 0; step < grid.n_steps; ++step) {
        const double t0 = step * dt;
        const double t1 = t0 + (0.5 - kGaussOffset) * dt;
        const double t2 = t0 + (0.5 + kGaussOffset) * dt;
        if (resonant) {
            const double wp1 = pulses.omega_p(t1);
            const double ws1 = pulses.omega_s(t1);
            const double wp2 = pulses.omega_p(t2);
            const double ws2 = pulses.omega_s(t2);
            psi = resonant_step_unitary(kCf4WeightLarge * wp1 + kCf4WeightSmall * wp2,
                                        kCf4WeightLarge * ws1 + kCf4WeightSmall * ws2,
                                        dt) *
                  psi;
            psi = resonant_step_unitary(kCf4WeightSmall * wp1 + kCf4WeightLarge * wp2,
                                        kCf4WeightSmall * ws1 + kCf4WeightLarge * ws2,
                                        dt) *
                  psi;
        } else {
            const Eigen::Matrix3cd h1 = pulses.hamiltonian(t1).matrix();
            const Eigen::Matrix3cd h2 = pulses.hamiltonian(t2).matrix();
            psi = hermitian_step_unitary(
                      kCf4WeightLarge * h1 + kCf4WeightSmall * h2, dt) *
                  psi;
            psi = hermitian_step_unitary(
                      kCf4WeightSmall * h1 + kCf4WeightLarge * h2, dt) *
                  psi;
        }
        const int done = step + 1;
        if (done % grid.sample_stride == 0 || done == grid.n_steps) {
            record(done);
        }
    }
    return traj;
}

double convergence_check(const PulseSchedule& pulses, const StateVector& initial,
                         const TimeGrid& grid) {
    const Trajectory coarse = propagate(pulses, initial, grid);
    const TimeGrid fine_grid(2 * grid.n_steps, grid.t_f, 2 * grid.sample_stride);
    const Trajectory fine = propagate(pulses, initial, fine_grid);

    double worst = 0.0;
    const std::size_t n = std::min(coarse.states.size(), fine.states.size());
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst,
                         (coarse.states[i] - fine.states[i]).cwiseAbs().maxCoeff());
    }
    return worst;
}

Trajectory propagate_checked(const PulseSchedule& pulses, const StateVector& initial,
                             const TimeGrid& grid, double tolerance) {
    const double deviation = convergence_check(pulses, initial, grid);
    if (deviation > tolerance) {
        throw StepSizeError("step-halving deviation " + std::to_string(deviation) +
                            " exceeds tolerance " + std::to_string(tolerance) +
                            "; refine the time grid");
    }
    return propagate(pulses, initial, grid);
}

} // namespace lrpulse
