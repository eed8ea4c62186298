#include <cmath>

#include "doctest.h"

#include "beatlab/sem.hpp"
#include "beatlab/spectral.hpp"

using namespace beatlab;

namespace {

ModelParams make_params(int n_tls = 2, double g = 0.07) {
    ModelParams p;
    p.n_tls = n_tls;
    p.g = g;
    return p;
}

} // namespace

TEST_CASE("SEM Hamiltonian entries") {
    const ModelParams params = make_params();
    const SemHamiltonian sem = sem_hamiltonian(params);
    CHECK(sem.matrix(0, 0) == doctest::Approx(2.0));
    CHECK(sem.matrix(1, 1) == doctest::Approx(2.0));
    CHECK(sem.matrix(2, 2) == doctest::Approx(2.0));
    CHECK(sem.matrix(0, 1) == doctest::Approx(0.07 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sem.matrix(1, 2) == doctest::Approx(0.07).epsilon(1e-12));
    CHECK(sem.matrix(0, 2) == 0.0);

    CHECK(sem_hamiltonian(make_params(2, 0.0)).matrix.isDiagonal(0.0));
    CHECK_THROWS_AS(sem_hamiltonian(make_params(1)), std::domain_error);
}

TEST_CASE("SEM Hamiltonian equals the projected full TC Hamiltonian") {
    for (int n_tls : {2, 3, 6}) {
        const ModelParams params = make_params(n_tls);
        const Basis basis(params);
        const Matrix full = build_hamiltonian(ModelKind::TC, params);
        const double shift = uncoupled_ground_energy(params);
        const int idx[3] = {basis.index(0, 2), basis.index(1, 1), basis.index(2, 0)};
        const SemHamiltonian sem = sem_hamiltonian(params);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const double expected = full(idx[r], idx[c]).real() - (r == c ? shift : 0.0);
                CHECK(sem.matrix(r, c) == doctest::Approx(expected).epsilon(1e-12));
            }
    }
}

TEST_CASE("resonant triplet") {
    const ModelParams params = make_params();
    const PolaritonTriplet t = resonant_triplet(params);

    CHECK(rabi_frequency(params) == doctest::Approx(0.07 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(t.e_plus == doctest::Approx(2.1212436).epsilon(1e-7));
    CHECK(t.e_zero == doctest::Approx(2.0));
    CHECK(t.e_minus == doctest::Approx(1.8787564).epsilon(1e-7));
    CHECK(t.alpha == 0.0);
    CHECK(t.e_plus + t.e_minus == doctest::Approx(2.0 * t.e_zero).epsilon(1e-14));

    SUBCASE("Omega_N^2 + Omega_{N-1}^2 = Omega_{2N-1}^2") {
        for (int n = 2; n <= 15; ++n) {
            const ModelParams p = make_params(n);
            const double lhs = omega_coupling(p, n) * omega_coupling(p, n) +
                               omega_coupling(p, n - 1) * omega_coupling(p, n - 1);
            const double rhs = rabi_frequency(p) * rabi_frequency(p);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
        }
    }
    SUBCASE("vectors orthonormal, middle polariton avoids |s_1,1>") {
        Eigen::Matrix3d v;
        v.col(0) = t.v_plus;
        v.col(1) = t.v_zero;
        v.col(2) = t.v_minus;
        CHECK((v.transpose() * v - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(t.v_zero(1)) < 1e-12);
        // They diagonalize the SEM matrix.
        const SemHamiltonian sem = sem_hamiltonian(params);
        CHECK((sem.matrix * t.v_plus - t.e_plus * t.v_plus).norm() < 1e-12);
        CHECK((sem.matrix * t.v_zero - t.e_zero * t.v_zero).norm() < 1e-12);
        CHECK((sem.matrix * t.v_minus - t.e_minus * t.v_minus).norm() < 1e-12);
    }
    SUBCASE("contract errors") {
        ModelParams detuned = params;
        detuned.omega_c = 1.01;
        CHECK_THROWS_AS(resonant_triplet(detuned), std::domain_error);
        CHECK_THROWS_AS(resonant_triplet(make_params(1)), std::domain_error);
    }
}

TEST_CASE("numeric triplet") {
    const ModelParams params = make_params();

    SUBCASE("TC reproduces the closed form") {
        const PolaritonTriplet n = numeric_triplet(ModelKind::TC, params);
        const PolaritonTriplet exact = resonant_triplet(params);
        CHECK(n.e_plus == doctest::Approx(exact.e_plus).epsilon(1e-12));
        CHECK(n.e_zero == doctest::Approx(exact.e_zero).epsilon(1e-12));
        CHECK(n.e_minus == doctest::Approx(exact.e_minus).epsilon(1e-12));
        CHECK(std::abs(n.alpha) < 1e-12);
    }
    SUBCASE("DM asymmetry is negative and near -g^2/(4w)") {
        const PolaritonTriplet n = numeric_triplet(ModelKind::DM, params);
        CHECK(n.alpha < 0.0);
        const double predicted = -params.g * params.g / 4.0;
        CHECK(std::abs(n.alpha - predicted) < 0.3 * std::abs(predicted));
    }
    SUBCASE("asymmetry vanishes with the coupling") {
        const PolaritonTriplet n = numeric_triplet(ModelKind::DM, make_params(2, 1e-4));
        CHECK(std::abs(n.alpha) < 1e-8);
    }
}

TEST_CASE("TC photon count closed form") {
    const ModelParams params = make_params();

    CHECK(tc_photon_count(params, 0.0) == 0.0);
    const double t_peak = M_PI / rabi_frequency(params);
    CHECK(tc_photon_count(params, t_peak) == doctest::Approx(16.0 / 9.0).epsilon(1e-12));
    CHECK(tc_photon_count_peak(params) == doctest::Approx(16.0 / 9.0).epsilon(1e-14));

    SUBCASE("matches the full simulation to machine precision") {
        const Basis basis(params);
        const EigenSystem es = diagonalize(build_hamiltonian(ModelKind::TC, params));
        const TimeGrid grid = TimeGrid::from_span(3000.0, 0.5);
        const auto trace = observable_trace(propagate_spectral(es, basis.unit_state(2, 0), grid),
                                            photon_operator(PhotonOp::Number, params), grid);
        double sup = 0.0;
        for (int i = 0; i < grid.count; ++i)
            sup = std::max(sup, std::abs(trace.values[static_cast<std::size_t>(i)] -
                                         tc_photon_count(params, grid.time(i))));
        CHECK(sup < 1e-10);
    }
    SUBCASE("values stay in the predicted range") {
        for (int i = 0; i <= 2000; ++i) {
            const double v = tc_photon_count(params, 3000.0 * i / 2000.0);
            CHECK(v >= -1e-12);
            CHECK(v <= tc_photon_count_peak(params) + 1e-12);
        }
    }
    SUBCASE("contract errors") {
        CHECK_THROWS_AS(tc_photon_count(make_params(1), 1.0), std::domain_error);
        ModelParams detuned = params;
        detuned.omega_c = 1.05;
        CHECK_THROWS_AS(tc_photon_count(detuned, 1.0), std::domain_error);
    }
}
