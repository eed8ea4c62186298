// spectral.hpp — Diagonalization, state propagation, and observable traces

#pragma once

#include <vector>

#include "beatlab/models.hpp"

namespace beatlab {

// Eigenpairs of a Hermitian matrix, energies ascending, vectors orthonormal
// columns.
struct EigenSystem {
    Eigen::VectorXd energies;
    Matrix vectors;

    int dim() const { return static_cast<int>(energies.size()); }
};

// Uniform time grid t_i = t0 + i * dt, i in [0, count).
struct TimeGrid {
    double t0{0.0};
    double dt{0.5};
    int count{6001};

    double time(int i) const { return t0 + i * dt; }
    double t_end() const { return time(count - 1); }

    static TimeGrid from_span(double t_max, double dt) {
        return {0.0, dt, static_cast<int>(std::floor(t_max / dt + 0.5)) + 1};
    }
};

// Real observable sampled on a uniform grid.
struct ObservableTrace {
    TimeGrid grid;
    std::vector<double> values;
};

// Mixed spectral reconstruction: projection coefficients, eigenvectors, and
// eigenvalues may each come from a different model.
struct HybridSpec {
    ModelKind coefficient_source{ModelKind::TC};
    ModelKind eigenvector_source{ModelKind::TC};
    ModelKind eigenvalue_source{ModelKind::DM};
};

struct HybridResult {
    ObservableTrace trace;
    // Largest deviation of the raw (pre-renormalization) state norm from 1.
    double max_norm_deviation{0.0};
};

struct ConvergenceReport {
    int cutoff{0};
    int doubled_cutoff{0};
    double sup_diff{0.0};
    bool passed{false};
};

// Dense Hermitian eigendecomposition. Throws std::invalid_argument for a
// non-Hermitian input.
EigenSystem diagonalize(const Matrix& h);

// psi(t) = sum_l c_l exp(-i E_l t) P_l with c_l = <P_l|psi(0)>.
std::vector<Vector> propagate_spectral(const EigenSystem& eig, const Vector& psi0,
                                       const TimeGrid& grid);

// Single-time evaluation of the spectral propagator.
Vector evolve_at(const EigenSystem& eig, const Vector& psi0, double t);

// Fixed-step RK4 integration of i dpsi/dt = H psi, resampled on the grid.
// Throws std::runtime_error when the norm drift over the run exceeds 1e-8.
std::vector<Vector> propagate_ode(const Matrix& h, const Vector& psi0, const TimeGrid& grid,
                                  double dt_max);

// Default RK4 step from the Gershgorin bound on |E|: 2*pi / (40 * max|E|).
double default_ode_step(const Matrix& h);

// values[i] = <psi(t_i)|op|psi(t_i)>, real part (imaginary part checked small).
ObservableTrace observable_trace(const std::vector<Vector>& states, const Matrix& op,
                                 const TimeGrid& grid);

// Greedy maximum-overlap assignment: result[r] is the column of `other` paired
// with column r of `reference`. Throws std::runtime_error when a pairing is
// ambiguous (two remaining candidates within 1e-6 in |overlap|).
std::vector<int> match_eigenpairs(const EigenSystem& reference, const EigenSystem& other);

// Photon-count trace of the mixed reconstruction; the state is renormalized
// at each sample before the expectation value is taken.
HybridResult hybrid_propagate(const HybridSpec& spec, const ModelParams& params,
                              const Vector& psi0, const TimeGrid& grid);

// Reruns the <a^dag a> trace at photon_cutoff and 2*photon_cutoff starting
// from |s_k, n> and reports the sup-norm difference; passes iff < 1e-8.
ConvergenceReport convergence_check(ModelKind kind, const ModelParams& params, BasisState init,
                                    const TimeGrid& grid);

} // namespace beatlab
