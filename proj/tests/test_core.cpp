#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

#include "lrpulse/errors.hpp"
#include "lrpulse/operators.hpp"
#include "lrpulse/state.hpp"
#include "lrpulse/units.hpp"

using namespace lrpulse;
using cd = std::complex<double>;

namespace {
const cd I{0.0, 1.0};

double max_abs(const Eigen::Matrix3cd& m) { return m.cwiseAbs().maxCoeff(); }
} // namespace

TEST_CASE("state vectors enforce normalization") {
    CHECK_THROWS_AS(StateVector(Eigen::Vector3cd(1.0, 1.0, 0.0)), NormalizationError);
    CHECK_THROWS_AS(StateVector(Eigen::Vector3cd(0.0, 0.0, 0.0)), NormalizationError);

    const StateVector target = StateVector::target_minus3();
    CHECK(target.c3() == cd(-1.0, 0.0));
    const auto pops = StateVector::bare1().populations();
    CHECK(pops[0] == doctest::Approx(1.0));
    CHECK(pops[1] == 0.0);
    CHECK(pops[2] == 0.0);

    const StateVector super(Eigen::Vector3cd(std::sqrt(0.5), 0.0, cd(0.0, std::sqrt(0.5))));
    const auto p = super.populations();
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK(p[2] == doctest::Approx(0.5));
}

TEST_CASE("spin-1 operators match their printed entries") {
    const auto& [k1, k2, k3] = spin1_operators();

    Eigen::Matrix3cd k1_ref = Eigen::Matrix3cd::Zero();
    k1_ref(0, 1) = k1_ref(1, 0) = 1.0;
    Eigen::Matrix3cd k2_ref = Eigen::Matrix3cd::Zero();
    k2_ref(1, 2) = k2_ref(2, 1) = 1.0;
    Eigen::Matrix3cd k3_ref = Eigen::Matrix3cd::Zero();
    k3_ref(0, 2) = -I;
    k3_ref(2, 0) = I;

    CHECK(max_abs(k1.matrix() - k1_ref) == 0.0);
    CHECK(max_abs(k2.matrix() - k2_ref) == 0.0);
    CHECK(max_abs(k3.matrix() - k3_ref) == 0.0);
}

TEST_CASE("spin-1 commutators close cyclically") {
    const auto& ops = spin1_operators();
    const Eigen::Matrix3cd k1 = ops.k1.matrix();
    const Eigen::Matrix3cd k2 = ops.k2.matrix();
    const Eigen::Matrix3cd k3 = ops.k3.matrix();

    CHECK(max_abs(commutator(k1, k2) - I * k3) <= 1e-15);
    CHECK(max_abs(commutator(k2, k3) - I * k1) <= 1e-15);
    CHECK(max_abs(commutator(k3, k1) - I * k2) <= 1e-15);
}

TEST_CASE("resonant Hamiltonian structure") {
    CHECK(max_abs(hamiltonian_resonant(0.0, 0.0).matrix()) == 0.0);

    const Eigen::Matrix3cd h = hamiltonian_resonant(2.0, 0.0).matrix();
    CHECK(h(0, 1) == cd(1.0, 0.0));
    CHECK(h(1, 0) == cd(1.0, 0.0));
    CHECK(max_abs(h) == 1.0);
    CHECK(h(1, 2) == cd(0.0, 0.0));

    // Against the operator composition, and the structural invariants.
    std::mt19937 rng(7001);
    std::uniform_real_distribution<double> amp(-50.0, 50.0);
    const auto& ops = spin1_operators();
    for (int i = 0; i < 1000; ++i) {
        const double wp = amp(rng);
        const double ws = amp(rng);
        const Eigen::Matrix3cd built = hamiltonian_resonant(wp, ws).matrix();
        const Eigen::Matrix3cd composed =
            0.5 * (wp * ops.k1.matrix() + ws * ops.k2.matrix());
        CHECK(max_abs(built - composed) <= 1e-14);
        CHECK(std::abs(built.trace()) == 0.0);
        CHECK(std::abs(built(0, 2)) == 0.0);
        CHECK(max_abs(built - built.adjoint().eval()) <= 1e-14);
    }
}

TEST_CASE("detuned Hamiltonian structure") {
    std::mt19937 rng(7002);
    std::uniform_real_distribution<double> amp(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double wp = amp(rng);
        const double ws = amp(rng);
        CHECK(max_abs(hamiltonian_detuned(wp, ws, 0.0, 0.0).matrix() -
                      hamiltonian_resonant(wp, ws).matrix()) == 0.0);
    }

    const Eigen::Matrix3cd bare = hamiltonian_detuned(0.0, 0.0, 0.7, -1.3).matrix();
    CHECK(bare(0, 0) == cd(0.0, 0.0));
    CHECK(bare(1, 1) == cd(0.7, 0.0));
    CHECK(bare(2, 2) == cd(-1.3, 0.0));
    CHECK(max_abs(bare - Eigen::Vector3cd(0.0, 0.7, -1.3).asDiagonal().toDenseMatrix()) == 0.0);

    const Eigen::Matrix3cd h = hamiltonian_detuned(1.0, 1.0, 0.5, -0.5).matrix();
    CHECK(max_abs(h - h.adjoint().eval()) <= 1e-14);
    CHECK(std::abs(h.trace() - cd(0.0, 0.0)) <= 1e-15);
}

TEST_CASE("adiabatic frame limits") {
    const AdiabaticFrame stokes_only = adiabatic_frame(0.0, 2.5);
    CHECK(stokes_only.theta == doctest::Approx(0.0));
    CHECK((stokes_only.n_zero - Eigen::Vector3d(1, 0, 0)).norm() <= 1e-15);

    const AdiabaticFrame pump_only = adiabatic_frame(3.0, 0.0);
    CHECK(pump_only.theta == doctest::Approx(0.5 * kPi));
    CHECK((pump_only.n_zero - Eigen::Vector3d(0, 0, -1)).norm() <= 1e-15);

    CHECK_THROWS_AS(adiabatic_frame(0.0, 0.0), DegeneratePulse);
}

TEST_CASE("adiabatic frame eigensystem against a numerical diagonalization") {
    const AdiabaticFrame f = adiabatic_frame(1.0, 1.0);
    CHECK(f.theta == doctest::Approx(0.25 * kPi));
    CHECK(f.eigenvalues[1] == doctest::Approx(std::sqrt(2.0) / 2.0));
    CHECK(f.eigenvalues[2] == doctest::Approx(-std::sqrt(2.0) / 2.0));

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(hamiltonian_resonant(1.0, 1.0).matrix());
    // Sorted ascending: -omega/2, 0, +omega/2.
    CHECK(es.eigenvalues()(0) == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(std::abs(es.eigenvalues()(1)) <= 1e-12);
    CHECK(es.eigenvalues()(2) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));

    std::mt19937 rng(7003);
    std::uniform_real_distribution<double> amp(0.05, 50.0);
    for (int i = 0; i < 300; ++i) {
        const double wp = amp(rng);
        const double ws = amp(rng);
        const AdiabaticFrame frame = adiabatic_frame(wp, ws);
        const Eigen::Matrix3cd h = hamiltonian_resonant(wp, ws).matrix();

        const Eigen::Vector3d evs = {frame.eigenvalues[0], frame.eigenvalues[1],
                                     frame.eigenvalues[2]};
        const Eigen::Vector3d vecs[3] = {frame.n_zero, frame.n_plus, frame.n_minus};
        for (int k = 0; k < 3; ++k) {
            const Eigen::Vector3cd residual = h * vecs[k] - evs(k) * vecs[k];
            CHECK(residual.norm() <= 1e-12 * frame.omega_rms);
        }
        // Orthonormality.
        CHECK(std::abs(frame.n_zero.norm() - 1.0) <= 1e-12);
        CHECK(std::abs(frame.n_plus.norm() - 1.0) <= 1e-12);
        CHECK(std::abs(frame.n_zero.dot(frame.n_plus)) <= 1e-12);
        CHECK(std::abs(frame.n_plus.dot(frame.n_minus)) <= 1e-12);
        CHECK(std::abs(std::tan(frame.theta) - wp / ws) <=
              1e-12 * std::max(1.0, std::abs(wp / ws)));
    }
}

TEST_CASE("adiabaticity ratio") {
    CHECK(adiabaticity_ratio(0.0, 5.0) == 0.0);
    CHECK(adiabaticity_ratio(0.1, 10.0) == doctest::Approx(0.01));
    CHECK_THROWS_AS(adiabaticity_ratio(1.0, 0.0), DegeneratePulse);

    // Constant-envelope design at eps = 0.2: theta advances at pi/(2 t_f)
    // under an rms frequency (pi/t_f) cot(eps), so the ratio is tan(eps)/2
    // at every instant.
    const double eps = 0.2;
    const double t_f = 4.0;
    const double theta_dot = 0.5 * kPi / t_f;
    const double omega = kPi / t_f / std::tan(eps);
    CHECK(adiabaticity_ratio(theta_dot, omega) ==
          doctest::Approx(0.5 * std::tan(eps)).epsilon(1e-12));
    CHECK(adiabaticity_ratio(theta_dot, omega) == doctest::Approx(0.1014).epsilon(1e-3));
}

TEST_CASE("angle unwrapping removes 2pi jumps") {
    const std::vector<double> wrapped = {0.0, 2.0, -2.0, 0.5};
    const std::vector<double> unwrapped = unwrap_angles(wrapped);
    CHECK(unwrapped[0] == 0.0);
    CHECK(unwrapped[1] == doctest::Approx(2.0));
    CHECK(unwrapped[2] == doctest::Approx(2 * kPi - 2.0)); // jump of -4.0 re-branched
    CHECK(unwrapped[3] == doctest::Approx(2 * kPi + 0.5));

    const std::vector<double> smooth = {0.0, 0.3, 0.6, 0.9};
    const std::vector<double> roundtrip = unwrap_angles(smooth);
    for (std::size_t i = 0; i < smooth.size(); ++i) {
        CHECK(roundtrip[i] == doctest::Approx(smooth[i]).epsilon(1e-14));
    }
}

TEST_CASE("hermiticity is enforced at construction") {
    Eigen::Matrix3cd bad = Eigen::Matrix3cd::Zero();
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(HermitianOperator3{bad}, ValidationError);
}
