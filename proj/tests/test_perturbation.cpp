#include <cmath>

#include "doctest.h"

#include "beatlab/perturbation.hpp"

using namespace beatlab;

namespace {

ModelParams make_params(int n_tls = 2, double g = 0.07) {
    ModelParams p;
    p.n_tls = n_tls;
    p.g = g;
    return p;
}

} // namespace

TEST_CASE("ground-state shifts") {
    const ModelParams params = make_params();
    const GroundShift shift = ground_shift(params);
    CHECK(shift.de_plus == doctest::Approx(1.1550e-3).epsilon(1e-4));
    CHECK(shift.de_minus == doctest::Approx(1.3040e-3).epsilon(1e-4));
    CHECK(shift.de_zero == 0.0);
    CHECK(shift.de_plus > 0.0);
    CHECK(shift.de_minus > 0.0);

    const GroundShift free = ground_shift(make_params(2, 0.0));
    CHECK(free.de_plus == 0.0);
    CHECK(free.de_minus == 0.0);
}

TEST_CASE("FEM shifts: explicit sum equals the closed forms") {
    for (int n = 2; n <= 15; ++n) {
        const ModelParams params = make_params(n);
        for (int which : {-1, 0, 1})
            CHECK(std::abs(fem_shift_sum(params, which) - fem_shift_closed(params, which)) <
                  1e-12);
    }
    const ModelParams p2 = make_params();
    CHECK(fem_shift_sum(p2, 0) == doctest::Approx(-p2.g * p2.g / 2.0).epsilon(1e-12));
    CHECK(fem_shift_sum(p2, 1) == doctest::Approx(-p2.g * p2.g).epsilon(1e-12));
    CHECK(fem_shift_sum(p2, -1) == doctest::Approx(-p2.g * p2.g).epsilon(1e-12));
}

TEST_CASE("perturbed energies and the beating frequency") {
    const ModelParams params = make_params();
    const PerturbedEnergies pe = perturbed_energies(params);

    SUBCASE("alpha closed form at N = 2 is -g^2/(4w)") {
        CHECK(pe.alpha_pred == doctest::Approx(-1.225e-3).epsilon(1e-12));
        CHECK(std::abs(pe.alpha_assembled - pe.alpha_pred) <
              5.0 * std::pow(params.g, 4)); // O(g^4) agreement
    }
    SUBCASE("matches the numeric Dicke asymmetry within 30% across g") {
        for (double g : {0.03, 0.05, 0.07, 0.09}) {
            const ModelParams p = make_params(2, g);
            const double numeric = numeric_triplet(ModelKind::DM, p).alpha;
            CHECK(std::abs(alpha_prediction(p) - numeric) <= 0.3 * std::abs(numeric));
        }
    }
    SUBCASE("g = 0 reduces to the unperturbed triplet") {
        const PerturbedEnergies free = perturbed_energies(make_params(2, 0.0));
        CHECK(free.e_plus == doctest::Approx(2.0));
        CHECK(free.e_zero == doctest::Approx(2.0));
        CHECK(free.e_minus == doctest::Approx(2.0));
    }
    SUBCASE("sign structure of alpha over N") {
        for (int n = 2; n <= 4; ++n) CHECK(alpha_prediction(make_params(n)) < 0.0);
        CHECK(alpha_prediction(make_params(5)) == 0.0);
        for (int n = 6; n <= 15; ++n) CHECK(alpha_prediction(make_params(n)) > 0.0);
    }
    SUBCASE("alpha scales exactly as g^2, alpha/Omega linear in g") {
        const double base = std::abs(alpha_prediction(make_params(2, 0.01)));
        for (double g : {0.02, 0.04, 0.08, 0.12}) {
            const double ratio = std::abs(alpha_prediction(make_params(2, g))) / base;
            const double expected = (g / 0.01) * (g / 0.01);
            CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
            CHECK(std::abs(alpha_prediction(make_params(2, g))) / rabi_frequency(make_params(2, g)) ==
                  doctest::Approx(g / 0.01 * base / rabi_frequency(make_params(2, 0.01)))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("approximate Dicke photon count") {
    const ModelParams params = make_params();
    CHECK(std::abs(dm_photon_count_approx(params, 0.0)) < 1e-15);

    SUBCASE("alpha -> 0 reduces to the exact TC formula") {
        // At N = 5 alpha vanishes identically, so the beating template and
        // the exact form must agree pointwise.
        const ModelParams p5 = make_params(5);
        for (int i = 0; i <= 5000; ++i) {
            const double t = 3000.0 * i / 5000.0;
            CHECK(std::abs(dm_photon_count_approx(p5, t) - tc_photon_count(p5, t)) < 1e-12);
        }
    }
    SUBCASE("bounded amplitude") {
        const double n = params.n_tls;
        const double bound = (n - 1.0) * 8.0 * n / ((2.0 * n - 1.0) * (2.0 * n - 1.0));
        for (int i = 0; i <= 2000; ++i) {
            const double v = dm_photon_count_approx(params, 6000.0 * i / 2000.0);
            CHECK(v >= -1e-12);
            CHECK(v <= bound + 1e-12);
        }
    }
}

TEST_CASE("beating period") {
    CHECK(beating_period(make_params(2)) == doctest::Approx(8.0 * M_PI / 0.0049).epsilon(1e-12));
    CHECK(beating_period(make_params(2)) == doctest::Approx(5129.1).epsilon(1e-4));
    CHECK(std::isinf(beating_period(make_params(5))));
    CHECK(beating_absent(make_params(5)));

    SUBCASE("integer minimizer above the divergence is N = 10") {
        int argmin = -1;
        double best = std::numeric_limits<double>::max();
        for (int n = 6; n <= 15; ++n) {
            const double t = beating_period(make_params(n));
            if (t < best) {
                best = t;
                argmin = n;
            }
        }
        CHECK(argmin == 10);
    }
}

TEST_CASE("unit conversion") {
    const UnitConversionReport report = convert_units(6.0, 450.0, 2);
    CHECK(report.g_over_omega == 0.075);
    CHECK(report.t_rabi_ns == doctest::Approx(1.283).epsilon(1e-3));
    // T_beat / T_rabi = Omega / alpha = 4 sqrt(3) / g under our conventions.
    CHECK(report.t_beat_ns / report.t_rabi_ns ==
          doctest::Approx(4.0 * std::sqrt(3.0) / 0.075).epsilon(1e-12));
    CHECK(!report.conventions.empty());
    CHECK_THROWS_AS(convert_units(-1.0, 450.0, 2), std::invalid_argument);
}

TEST_CASE("perturbation-theory domain errors") {
    CHECK_THROWS_AS(ground_shift(make_params(1)), std::domain_error);
    ModelParams detuned = make_params();
    detuned.omega_c = 1.1;
    CHECK_THROWS_AS(ground_shift(detuned), std::domain_error);
    CHECK_THROWS_AS(fem_shift_sum(make_params(), 3), std::invalid_argument);
}
