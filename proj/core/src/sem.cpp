#include "beatlab/sem.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "beatlab/spectral.hpp"

namespace beatlab {

double omega_coupling(const ModelParams& params, int m) {
    return params.g * std::sqrt(2.0 * m / params.n_tls);
}

double rabi_frequency(const ModelParams& params) {
    return omega_coupling(params, 2 * params.n_tls - 1);
}

SemHamiltonian sem_hamiltonian(const ModelParams& params) {
    params.validate();
    if (params.n_tls < 2)
        throw std::domain_error("sem_hamiltonian: second excitation manifold requires N >= 2");
    const double w_n = omega_coupling(params, params.n_tls);
    const double w_nm1 = omega_coupling(params, params.n_tls - 1);
    SemHamiltonian sem;
    sem.matrix << 2.0 * params.omega_c, w_n, 0.0,
                  w_n, params.omega_c + params.omega_m, w_nm1,
                  0.0, w_nm1, 2.0 * params.omega_m;
    sem.omega_c = params.omega_c;
    sem.omega_m = params.omega_m;
    sem.g = params.g;
    sem.n_tls = params.n_tls;
    return sem;
}

PolaritonTriplet resonant_triplet(const ModelParams& params) {
    params.validate();
    if (params.n_tls < 2)
        throw std::domain_error("resonant_triplet: requires N >= 2");
    if (!params.resonant())
        throw std::domain_error("resonant_triplet: requires omega_c == omega_m; "
                                "use numeric_triplet off resonance");
    const double w = params.omega_m;
    const double w_n = omega_coupling(params, params.n_tls);
    const double w_nm1 = omega_coupling(params, params.n_tls - 1);
    const double rabi = rabi_frequency(params);

    PolaritonTriplet triplet;
    triplet.e_plus = 2.0 * w + rabi;
    triplet.e_zero = 2.0 * w;
    triplet.e_minus = 2.0 * w - rabi;
    triplet.alpha = 0.0;
    if (rabi > 0.0) {
        const double s = std::sqrt(2.0) * rabi;
        triplet.v_plus << w_n / s, rabi / s, w_nm1 / s;
        triplet.v_minus << w_n / s, -rabi / s, w_nm1 / s;
        triplet.v_zero << w_nm1 / rabi, 0.0, -w_n / rabi;
    } else {
        triplet.v_plus << 1.0, 0.0, 0.0;
        triplet.v_zero << 0.0, 1.0, 0.0;
        triplet.v_minus << 0.0, 0.0, 1.0;
    }
    return triplet;
}

PolaritonTriplet numeric_triplet(ModelKind kind, const ModelParams& params) {
    const PolaritonTriplet reference = resonant_triplet(params);
    const Basis basis(params);
    const EigenSystem es = diagonalize(build_hamiltonian(kind, params));

    // SEM bright-basis flat indices: |s_0,2>, |s_1,1>, |s_2,0>.
    const std::array<int, 3> sem_idx = {basis.index(0, 2), basis.index(1, 1), basis.index(2, 0)};
    const std::array<Eigen::Vector3d, 3> refs = {reference.v_plus, reference.v_zero,
                                                 reference.v_minus};

    std::array<int, 3> chosen{-1, -1, -1};
    std::vector<bool> used(static_cast<std::size_t>(es.dim()), false);
    for (int r = 0; r < 3; ++r) {
        int best = -1;
        double best_overlap = -1.0, runner_up = -1.0;
        for (int l = 0; l < es.dim(); ++l) {
            if (used[static_cast<std::size_t>(l)]) continue;
            std::complex<double> overlap = 0.0;
            for (int c = 0; c < 3; ++c)
                overlap += std::conj(es.vectors(sem_idx[static_cast<std::size_t>(c)], l)) *
                           refs[static_cast<std::size_t>(r)](c);
            const double mag = std::abs(overlap);
            if (mag > best_overlap) {
                runner_up = best_overlap;
                best_overlap = mag;
                best = l;
            } else if (mag > runner_up) {
                runner_up = mag;
            }
        }
        if (best_overlap - runner_up < 1e-6)
            throw std::runtime_error("numeric_triplet: ambiguous overlap selection");
        chosen[static_cast<std::size_t>(r)] = best;
        used[static_cast<std::size_t>(best)] = true;
    }

    const double ground = (kind == ModelKind::TC) ? uncoupled_ground_energy(params)
                                                  : es.energies(0);

    PolaritonTriplet triplet;
    triplet.e_plus = es.energies(chosen[0]) - ground;
    triplet.e_zero = es.energies(chosen[1]) - ground;
    triplet.e_minus = es.energies(chosen[2]) - ground;
    triplet.alpha = 0.5 * (triplet.e_plus + triplet.e_minus) - triplet.e_zero;

    std::array<Eigen::Vector3d*, 3> outs = {&triplet.v_plus, &triplet.v_zero, &triplet.v_minus};
    for (int r = 0; r < 3; ++r) {
        Eigen::Vector3d proj;
        for (int c = 0; c < 3; ++c)
            proj(c) = es.vectors(sem_idx[static_cast<std::size_t>(c)],
                                 chosen[static_cast<std::size_t>(r)])
                          .real();
        const double norm = proj.norm();
        *outs[static_cast<std::size_t>(r)] = norm > 0.0 ? (proj / norm).eval() : proj;
    }
    return triplet;
}

double tc_photon_count(const ModelParams& params, double t) {
    params.validate();
    if (params.n_tls < 2) throw std::domain_error("tc_photon_count: requires N >= 2");
    if (!params.resonant())
        throw std::domain_error("tc_photon_count: closed form holds only at resonance");
    const double n = params.n_tls;
    const double w_t = rabi_frequency(params) * t;
    const double s = std::sin(0.5 * w_t);
    return -2.0 * (n - 1.0) * (1.0 - 4.0 * n + std::cos(w_t)) / ((2.0 * n - 1.0) * (2.0 * n - 1.0)) *
           s * s;
}

double tc_photon_count_peak(const ModelParams& params) {
    const double n = params.n_tls;
    return 8.0 * n * (n - 1.0) / ((2.0 * n - 1.0) * (2.0 * n - 1.0));
}

} // namespace beatlab
