#include "beatlab/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace beatlab {

using namespace std::complex_literals;

EigenSystem diagonalize(const Matrix& h) {
    if (!is_hermitian(h, 1e-12))
        throw std::invalid_argument("diagonalize: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("diagonalize: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<Vector> propagate_spectral(const EigenSystem& eig, const Vector& psi0,
                                       const TimeGrid& grid) {
    if (psi0.size() != eig.dim())
        throw std::invalid_argument("propagate_spectral: dimension mismatch");
    const Vector coeffs = eig.vectors.adjoint() * psi0;
    std::vector<Vector> states;
    states.reserve(static_cast<std::size_t>(grid.count));
    Vector phased(eig.dim());
    for (int i = 0; i < grid.count; ++i) {
        const double t = grid.time(i);
        for (int l = 0; l < eig.dim(); ++l)
            phased(l) = coeffs(l) * std::exp(-1.0i * eig.energies(l) * t);
        states.push_back(eig.vectors * phased);
    }
    return states;
}

Vector evolve_at(const EigenSystem& eig, const Vector& psi0, double t) {
    if (psi0.size() != eig.dim())
        throw std::invalid_argument("evolve_at: dimension mismatch");
    Vector phased = eig.vectors.adjoint() * psi0;
    for (int l = 0; l < eig.dim(); ++l) phased(l) *= std::exp(-1.0i * eig.energies(l) * t);
    return eig.vectors * phased;
}

double default_ode_step(const Matrix& h) {
    double bound = 0.0;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        double row = 0.0;
        for (Eigen::Index j = 0; j < h.cols(); ++j) row += std::abs(h(i, j));
        bound = std::max(bound, row);
    }
    if (bound == 0.0) return 1.0;
    return 2.0 * M_PI / (40.0 * bound);
}

std::vector<Vector> propagate_ode(const Matrix& h, const Vector& psi0, const TimeGrid& grid,
                                  double dt_max) {
    if (psi0.size() != h.rows() || h.rows() != h.cols())
        throw std::invalid_argument("propagate_ode: dimension mismatch");
    if (!(dt_max > 0.0)) throw std::invalid_argument("propagate_ode: dt_max must be positive");

    std::vector<Vector> states;
    states.reserve(static_cast<std::size_t>(grid.count));

    Vector psi = psi0;
    double t = grid.time(0);
    states.push_back(psi);

    Vector k1, k2, k3, k4;
    auto rhs = [&h](const Vector& v) -> Vector { return -1.0i * (h * v); };

    for (int i = 1; i < grid.count; ++i) {
        const double target = grid.time(i);
        const double span = target - t;
        const int n_sub = std::max(1, static_cast<int>(std::ceil(span / dt_max - 1e-12)));
        const double step = span / n_sub;
        for (int s = 0; s < n_sub; ++s) {
            k1 = rhs(psi);
            k2 = rhs(psi + 0.5 * step * k1);
            k3 = rhs(psi + 0.5 * step * k2);
            k4 = rhs(psi + step * k3);
            psi += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        t = target;
        states.push_back(psi);
    }

    const double drift = std::abs(psi.norm() - psi0.norm());
    if (!(drift <= 1e-8)) // NaN-safe: a diverged run must also throw
        throw std::runtime_error("propagate_ode: norm drift " + std::to_string(drift) +
                                 " exceeds 1e-8; rerun with a smaller dt_max");
    return states;
}

ObservableTrace observable_trace(const std::vector<Vector>& states, const Matrix& op,
                                 const TimeGrid& grid) {
    if (states.size() != static_cast<std::size_t>(grid.count))
        throw std::invalid_argument("observable_trace: state count does not match grid");
    ObservableTrace trace{grid, {}};
    trace.values.reserve(states.size());
    for (const Vector& psi : states) {
        if (psi.size() != op.rows())
            throw std::invalid_argument("observable_trace: dimension mismatch");
        trace.values.push_back((psi.adjoint() * op * psi).value().real());
    }
    return trace;
}

std::vector<int> match_eigenpairs(const EigenSystem& reference, const EigenSystem& other) {
    if (reference.dim() != other.dim())
        throw std::invalid_argument("match_eigenpairs: dimension mismatch");
    const int n = reference.dim();
    Eigen::MatrixXd overlap = (reference.vectors.adjoint() * other.vectors).cwiseAbs();

    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    std::vector<bool> row_used(static_cast<std::size_t>(n), false);
    std::vector<bool> col_used(static_cast<std::size_t>(n), false);

    for (int step = 0; step < n; ++step) {
        int best_r = -1, best_c = -1;
        double best = -1.0;
        for (int r = 0; r < n; ++r) {
            if (row_used[static_cast<std::size_t>(r)]) continue;
            for (int c = 0; c < n; ++c) {
                if (col_used[static_cast<std::size_t>(c)]) continue;
                if (overlap(r, c) > best) {
                    best = overlap(r, c);
                    best_r = r;
                    best_c = c;
                }
            }
        }
        // Ambiguity: another free column in this row ties the winner.
        double runner_up = -1.0;
        for (int c = 0; c < n; ++c) {
            if (c == best_c || col_used[static_cast<std::size_t>(c)]) continue;
            runner_up = std::max(runner_up, overlap(best_r, c));
        }
        if (runner_up >= 0.0 && best - runner_up < 1e-6)
            throw std::runtime_error("match_eigenpairs: ambiguous overlap assignment");
        assignment[static_cast<std::size_t>(best_r)] = best_c;
        row_used[static_cast<std::size_t>(best_r)] = true;
        col_used[static_cast<std::size_t>(best_c)] = true;
    }
    return assignment;
}

HybridResult hybrid_propagate(const HybridSpec& spec, const ModelParams& params,
                              const Vector& psi0, const TimeGrid& grid) {
    params.validate();
    const EigenSystem vec_es = diagonalize(build_hamiltonian(spec.eigenvector_source, params));

    // Coefficients and eigenvalues matched onto the eigenvector basis.
    Vector coeffs;
    if (spec.coefficient_source == spec.eigenvector_source) {
        coeffs = vec_es.vectors.adjoint() * psi0;
    } else {
        const EigenSystem coeff_es =
            diagonalize(build_hamiltonian(spec.coefficient_source, params));
        const std::vector<int> map = match_eigenpairs(vec_es, coeff_es);
        coeffs.resize(vec_es.dim());
        for (int l = 0; l < vec_es.dim(); ++l)
            coeffs(l) = (coeff_es.vectors.col(map[static_cast<std::size_t>(l)]).adjoint() * psi0)
                            .value();
    }

    Eigen::VectorXd energies;
    if (spec.eigenvalue_source == spec.eigenvector_source) {
        energies = vec_es.energies;
    } else {
        const EigenSystem val_es = diagonalize(build_hamiltonian(spec.eigenvalue_source, params));
        const std::vector<int> map = match_eigenpairs(vec_es, val_es);
        energies.resize(vec_es.dim());
        for (int l = 0; l < vec_es.dim(); ++l)
            energies(l) = val_es.energies(map[static_cast<std::size_t>(l)]);
    }

    const Matrix number = photon_operator(PhotonOp::Number, params);
    HybridResult result;
    result.trace.grid = grid;
    result.trace.values.reserve(static_cast<std::size_t>(grid.count));
    Vector phased(vec_es.dim());
    for (int i = 0; i < grid.count; ++i) {
        const double t = grid.time(i);
        for (int l = 0; l < vec_es.dim(); ++l)
            phased(l) = coeffs(l) * std::exp(-1.0i * energies(l) * t);
        Vector psi = vec_es.vectors * phased;
        const double norm = psi.norm();
        result.max_norm_deviation = std::max(result.max_norm_deviation, std::abs(norm - 1.0));
        if (norm > 0.0) psi /= norm;
        result.trace.values.push_back((psi.adjoint() * number * psi).value().real());
    }
    return result;
}

ConvergenceReport convergence_check(ModelKind kind, const ModelParams& params, BasisState init,
                                    const TimeGrid& grid) {
    params.validate();
    auto run = [&](int cutoff) {
        ModelParams p = params;
        p.photon_cutoff = cutoff;
        const Basis basis(p);
        const Vector psi0 = basis.unit_state(init.k_excitations, init.n_photons);
        const EigenSystem es = diagonalize(build_hamiltonian(kind, p));
        const auto states = propagate_spectral(es, psi0, grid);
        return observable_trace(states, photon_operator(PhotonOp::Number, p), grid);
    };
    const ObservableTrace base = run(params.cutoff());
    const ObservableTrace doubled = run(2 * params.cutoff());

    ConvergenceReport report;
    report.cutoff = params.cutoff();
    report.doubled_cutoff = 2 * params.cutoff();
    for (int i = 0; i < grid.count; ++i)
        report.sup_diff = std::max(report.sup_diff,
                                   std::abs(base.values[static_cast<std::size_t>(i)] -
                                            doubled.values[static_cast<std::size_t>(i)]));
    report.passed = report.sup_diff < 1e-8;
    return report;
}

} // namespace beatlab
