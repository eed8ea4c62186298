#include "beatlab/perturbation.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace beatlab {

void warn_if_outside_validated_range(const ModelParams& params) {
    if (params.g / params.omega_m > 0.12)
        std::cerr << "warning: g/omega = " << params.g / params.omega_m
                  << " exceeds the validated coupling ceiling 0.12\n";
}

namespace {

void require_resonant_sem(const ModelParams& params, const char* who) {
    params.validate();
    if (params.n_tls < 2) throw std::domain_error(std::string(who) + ": requires N >= 2");
    if (!params.resonant())
        throw std::domain_error(std::string(who) + ": requires resonance omega_c == omega_m");
    warn_if_outside_validated_range(params);
}

} // namespace

GroundShift ground_shift(const ModelParams& params) {
    require_resonant_sem(params, "ground_shift");
    const double w = params.omega_m;
    const double rabi = rabi_frequency(params);
    if (std::abs(2.0 * w - rabi) < 1e-12 * w)
        throw std::domain_error("ground_shift: 2w == Omega (deep-strong regime, outside the "
                                "validity of the perturbation theory)");
    GroundShift shift;
    shift.de_plus = params.g * params.g / (2.0 * (2.0 * w + rabi));
    shift.de_minus = params.g * params.g / (2.0 * (2.0 * w - rabi));
    shift.de_zero = 0.0;
    return shift;
}

double fem_shift_sum(const ModelParams& params, int which) {
    require_resonant_sem(params, "fem_shift_sum");
    if (which != -1 && which != 0 && which != 1)
        throw std::invalid_argument("fem_shift_sum: which must be -1, 0, or +1");
    const PolaritonTriplet triplet = resonant_triplet(params);
    const Eigen::Vector3d& p =
        which > 0 ? triplet.v_plus : (which == 0 ? triplet.v_zero : triplet.v_minus);

    const double n_tls = params.n_tls;
    const double prefactor = params.g / std::sqrt(n_tls);
    double sum = 0.0;
    // The CRW raising term maps the SEM bright state |s_m, 2-m> onto the FEM
    // product state |s_{m+1}, 3-m>:
    //   (g/sqrt(N)) J_+ a^dag |s_m, 2-m> =
    //     (g/sqrt(N)) sqrt((N-m)(m+1)) sqrt(3-m) |s_{m+1}, 3-m>.
    // Bright-basis component order is (|s_0,2>, |s_1,1>, |s_2,0>), i.e. the
    // component index equals m.
    for (int m = 0; m <= 2; ++m) {
        if (m + 1 > params.n_tls) continue; // |s_{m+1}> absent for small N
        const double ladder = std::sqrt((n_tls - m) * (m + 1.0)) * std::sqrt(3.0 - m);
        const double amp = prefactor * ladder * p(m);
        sum += amp * amp;
    }
    // All FEM energies approximated by 4w and the polariton energy by 2w.
    return sum / (-2.0 * params.omega_m);
}

double fem_shift_closed(const ModelParams& params, int which) {
    require_resonant_sem(params, "fem_shift_closed");
    const double g2 = params.g * params.g;
    const double w = params.omega_m;
    const double n = params.n_tls;
    if (which == 0) return 3.0 * g2 * (3.0 - 2.0 * n) / (2.0 * w * (2.0 * n - 1.0));
    if (which == 1 || which == -1)
        return g2 * (10.0 + 7.0 * n * (2.0 * n - 3.0)) / (2.0 * n * (2.0 * n - 1.0) * (-2.0 * w));
    throw std::invalid_argument("fem_shift_closed: which must be -1, 0, or +1");
}

double alpha_prediction(const ModelParams& params) {
    require_resonant_sem(params, "alpha_prediction");
    const double n = params.n_tls;
    return (params.g * params.g / (2.0 * params.omega_m)) * (n - 5.0) / (n * (2.0 * n - 1.0));
}

PerturbedEnergies perturbed_energies(const ModelParams& params) {
    require_resonant_sem(params, "perturbed_energies");
    const double w = params.omega_m;
    const double rabi = rabi_frequency(params);

    PerturbedEnergies out;
    out.ground = ground_shift(params);
    out.de_zero_fem = fem_shift_sum(params, 0);
    out.de_pm_fem = fem_shift_sum(params, +1);
    out.e_plus = 2.0 * w + rabi + out.ground.de_plus + out.de_pm_fem;
    out.e_zero = 2.0 * w + out.de_zero_fem;
    out.e_minus = 2.0 * w - rabi + out.ground.de_minus + out.de_pm_fem;
    out.alpha_pred = alpha_prediction(params);
    out.alpha_assembled = 0.5 * (out.e_plus + out.e_minus) - out.e_zero;
    return out;
}

double dm_photon_count_approx(const ModelParams& params, double t) {
    require_resonant_sem(params, "dm_photon_count_approx");
    const double n = params.n_tls;
    const double rabi = rabi_frequency(params);
    const double alpha = alpha_prediction(params);
    return (n - 1.0) / (2.0 * (2.0 * n - 1.0) * (2.0 * n - 1.0)) *
           (std::cos(2.0 * rabi * t) + 8.0 * n - 1.0 -
            8.0 * n * std::cos(alpha * t) * std::cos(rabi * t));
}

bool beating_absent(const ModelParams& params) { return params.n_tls == 5; }

double beating_period(const ModelParams& params) {
    params.validate();
    if (params.n_tls < 2) throw std::domain_error("beating_period: requires N >= 2");
    if (beating_absent(params)) return std::numeric_limits<double>::infinity();
    const double n = params.n_tls;
    return (4.0 * M_PI * params.omega_m / (params.g * params.g)) *
           std::abs(n * (2.0 * n - 1.0) / (n - 5.0));
}

UnitConversionReport convert_units(double omega_c_ghz, double g_mhz, int n_tls) {
    if (!(omega_c_ghz > 0.0) || !(g_mhz > 0.0) || n_tls < 2)
        throw std::invalid_argument("convert_units: need positive frequencies and N >= 2");
    UnitConversionReport report;
    report.omega_c_ghz = omega_c_ghz;
    report.g_mhz = g_mhz;
    report.n_tls = n_tls;
    report.g_over_omega = g_mhz / (1000.0 * omega_c_ghz);

    ModelParams params;
    params.omega_m = params.omega_c = 1.0;
    params.g = report.g_over_omega;
    params.n_tls = n_tls;

    // One dimensionless time unit is 1 / (2 pi omega_c_ghz) ns.
    const double ns_per_unit = 1.0 / (2.0 * M_PI * omega_c_ghz);
    report.rabi_dimensionless = rabi_frequency(params);
    report.t_rabi_ns = 2.0 * M_PI / report.rabi_dimensionless * ns_per_unit;
    report.t_beat_ns = beating_period(params) * ns_per_unit;
    report.conventions =
        "g_over_omega = (g/2pi MHz) / (1000 * omega_c/2pi GHz); "
        "T_rabi = 2pi/Omega with Omega = g sqrt(2(2N-1)/N) * omega_c; "
        "T_beat = (4pi omega_c / g^2) |N(2N-1)/(N-5)|";
    return report;
}

} // namespace beatlab
