#include "beatlab/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace beatlab {

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::TC: return "tc";
    case ModelKind::DM: return "dm";
    case ModelKind::PF: return "pf";
    }
    return "?";
}

ModelKind parse_model_kind(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "tc") return ModelKind::TC;
    if (s == "dm" || s == "dicke") return ModelKind::DM;
    if (s == "pf") return ModelKind::PF;
    throw std::invalid_argument("unknown model kind '" + name + "' (expected tc, dm, or pf)");
}

Matrix build_hamiltonian(ModelKind kind, const ModelParams& params) {
    params.validate();
    const Matrix jz = collective_operator(SpinOp::Jz, params);
    const Matrix num = photon_operator(PhotonOp::Number, params);
    const Matrix h0 = params.omega_m * jz + params.omega_c * num;
    const double coupling = params.g / std::sqrt(static_cast<double>(params.n_tls));

    switch (kind) {
    case ModelKind::TC: {
        const Matrix jp = collective_operator(SpinOp::Jplus, params);
        const Matrix jm = collective_operator(SpinOp::Jminus, params);
        const Matrix a = photon_operator(PhotonOp::Annihilate, params);
        const Matrix adag = photon_operator(PhotonOp::Create, params);
        return h0 + coupling * (jp * a + jm * adag);
    }
    case ModelKind::DM: {
        const Matrix jx = collective_operator(SpinOp::Jx, params);
        const Matrix a = photon_operator(PhotonOp::Annihilate, params);
        const Matrix adag = photon_operator(PhotonOp::Create, params);
        return h0 + coupling * (jx * (a + adag));
    }
    case ModelKind::PF:
        return build_hamiltonian(ModelKind::DM, params) + dse_term(params);
    }
    throw std::invalid_argument("build_hamiltonian: invalid model kind");
}

Matrix crw_term(const ModelParams& params) {
    params.validate();
    const double coupling = params.g / std::sqrt(static_cast<double>(params.n_tls));
    const Matrix jp = collective_operator(SpinOp::Jplus, params);
    const Matrix jm = collective_operator(SpinOp::Jminus, params);
    const Matrix a = photon_operator(PhotonOp::Annihilate, params);
    const Matrix adag = photon_operator(PhotonOp::Create, params);
    return coupling * (jp * adag + jm * a);
}

Matrix dse_term(const ModelParams& params) {
    params.validate();
    const Matrix jx = collective_operator(SpinOp::Jx, params);
    return (params.g * params.g / (params.omega_c * params.n_tls)) * (jx * jx);
}

Matrix excitation_number(const ModelParams& params) {
    return collective_operator(SpinOp::Jz, params) + photon_operator(PhotonOp::Number, params);
}

double uncoupled_ground_energy(const ModelParams& params) {
    return -0.5 * params.n_tls * params.omega_m;
}

} // namespace beatlab
