// sem.hpp — Second-excitation-manifold closed forms: bright basis, polariton
// triplet, asymmetry, and the exact TC photon count

#pragma once

#include "beatlab/models.hpp"

namespace beatlab {

// 3x3 Hamiltonian on the SEM bright basis (|s_0,2>, |s_1,1>, |s_2,0>):
//   diag (2 omega_c, omega_c + omega_m, 2 omega_m),
//   off-diagonals Omega_N and Omega_{N-1}, corners zero.
struct SemHamiltonian {
    Eigen::Matrix3d matrix;
    double omega_c{0.0};
    double omega_m{0.0};
    double g{0.0};
    int n_tls{0};
};

// Polariton triplet (P_+, P_0, P_-) with energies in the ground-shifted
// convention and the eigenvalue asymmetry alpha = (E_+ + E_-)/2 - E_0.
// Vectors are components on the SEM bright basis.
struct PolaritonTriplet {
    double e_plus{0.0};
    double e_zero{0.0};
    double e_minus{0.0};
    Eigen::Vector3d v_plus;
    Eigen::Vector3d v_zero;
    Eigen::Vector3d v_minus;
    double alpha{0.0};
};

// Omega_M = g sqrt(2 M / N).
double omega_coupling(const ModelParams& params, int m);

// Effective SEM Rabi frequency Omega = Omega_{2N-1} = g sqrt(2 (2N-1) / N).
double rabi_frequency(const ModelParams& params);

// SEM Hamiltonian on the bright basis. Requires N >= 2.
SemHamiltonian sem_hamiltonian(const ModelParams& params);

// Closed-form triplet at resonance: energies {2w, 2w ± Omega}, alpha = 0.
// Throws std::domain_error off resonance or for N < 2.
PolaritonTriplet resonant_triplet(const ModelParams& params);

// Full-space triplet: diagonalizes the model, selects the three eigenstates
// with maximal overlap against the resonant TC triplet, and reports their
// ground-shifted energies and alpha. Vectors are the normalized projections
// onto the SEM bright basis.
PolaritonTriplet numeric_triplet(ModelKind kind, const ModelParams& params);

// Exact resonant TC photon count from |s_2, 0>:
//   <n>(t) = -2(N-1)(1 - 4N + cos Wt)/(2N-1)^2 * sin^2(Wt/2), W = Omega_{2N-1}.
double tc_photon_count(const ModelParams& params, double t);

// Peak of the above over t: 8N(N-1)/(2N-1)^2, attained at Wt = pi.
double tc_photon_count_peak(const ModelParams& params);

} // namespace beatlab
