// perturbation.hpp — Counter-rotating-wave perturbation theory on the SEM:
// ground and FEM shifts, perturbed Dicke energies, the approximate photon
// count, the beating frequency alpha, and the beating period

#pragma once

#include "beatlab/sem.hpp"

namespace beatlab {

// Second-order shifts from coupling to the global ground state.
struct GroundShift {
    double de_plus{0.0};  // g^2 / (2 (2w + Omega))
    double de_minus{0.0}; // g^2 / (2 (2w - Omega))
    double de_zero{0.0};  // middle polariton is untouched
};

struct PerturbedEnergies {
    GroundShift ground;            // shifts from the global ground state
    double de_zero_fem{0.0};       // FEM shift of P_0
    double de_pm_fem{0.0};         // FEM shift of P_+/P_- (equal at this order)
    double e_plus{0.0};            // 2w + Omega + dE_+
    double e_zero{0.0};            // 2w + dE_0
    double e_minus{0.0};           // 2w - Omega + dE_-
    double alpha_pred{0.0};        // closed-form beating frequency
    double alpha_assembled{0.0};   // (e_+ + e_-)/2 - e_0 from the totals above
};

struct UnitConversionReport {
    double omega_c_ghz{0.0};
    double g_mhz{0.0};
    int n_tls{0};
    double g_over_omega{0.0};
    double rabi_dimensionless{0.0}; // Omega_{2N-1} in units of omega_c
    double t_rabi_ns{0.0};          // 2 pi / Omega in physical units
    double t_beat_ns{0.0};          // beating period in physical units
    std::string conventions;        // definitions used, spelled out
};

// Emits a one-line warning on stderr when g/omega exceeds the validated
// coupling ceiling 0.12.
void warn_if_outside_validated_range(const ModelParams& params);

// Ground-state shifts. Throws std::domain_error at the 2w = Omega singularity.
GroundShift ground_shift(const ModelParams& params);

// Explicit matrix-element sum over the FEM product states for polariton
// `which` in {+1, 0, -1}, with every denominator replaced by -2w.
double fem_shift_sum(const ModelParams& params, int which);

// Closed forms for the same shifts:
//   dE_0^(4) = 3 g^2 (3 - 2N) / (2w (2N-1))
//   dE_±^(4) = g^2 (10 + 7N(2N-3)) / (2N (2N-1) (-2w))
double fem_shift_closed(const ModelParams& params, int which);

// Beating frequency: alpha = (g^2 / 2w) (N - 5) / (N (2N - 1)).
double alpha_prediction(const ModelParams& params);

PerturbedEnergies perturbed_energies(const ModelParams& params);

// Approximate Dicke photon count from |s_2, 0>:
//   <n>(t) = (N-1)/(2(2N-1)^2) [cos 2Wt + 8N - 1 - 8N cos(at) cos(Wt)]
// with W = Omega_{2N-1} and a = alpha_prediction.
double dm_photon_count_approx(const ModelParams& params, double t);

// T_beat = (4 pi w / g^2) |N(2N-1)/(N-5)|; +infinity at N = 5 (no beating).
double beating_period(const ModelParams& params);
bool beating_absent(const ModelParams& params); // true iff N == 5

// Physical-unit report for a cavity at omega_c / 2pi GHz and coupling
// g / 2pi MHz.
UnitConversionReport convert_units(double omega_c_ghz, double g_mhz, int n_tls);

} // namespace beatlab
