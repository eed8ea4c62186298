// models.hpp — Tavis-Cummings, Dicke, and Pauli-Fierz Hamiltonians

#pragma once

#include <string>

#include "beatlab/basis.hpp"

namespace beatlab {

enum class ModelKind { TC, DM, PF };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& name); // accepts "tc", "dm", "pf" (case-insensitive)

// H_TC = omega_m J_z + omega_c a^dag a + (g/sqrt(N)) (J_+ a + J_- a^dag)
// H_DM = omega_m J_z + omega_c a^dag a + (g/sqrt(N)) J_x (a + a^dag)
// H_PF = H_DM + (g^2 / (omega_c N)) J_x^2
Matrix build_hamiltonian(ModelKind kind, const ModelParams& params);

// Counter-rotating-wave term (g/sqrt(N)) (J_+ a^dag + J_- a); changes the
// total excitation J_z + a^dag a by ±2.
Matrix crw_term(const ModelParams& params);

// Dipole self-energy term (g^2 / (omega_c N)) J_x^2; positive semidefinite.
Matrix dse_term(const ModelParams& params);

// Excitation-number operator J_z + a^dag a (conserved by the TC model).
Matrix excitation_number(const ModelParams& params);

// Energy of the uncoupled ground state |s_0, 0>, i.e. -N omega_m / 2.
// Spectra are reported shifted so this state sits at zero.
double uncoupled_ground_energy(const ModelParams& params);

} // namespace beatlab
