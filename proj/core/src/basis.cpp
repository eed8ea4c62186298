#include "beatlab/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beatlab {

bool ModelParams::resonant(double tol) const {
    return std::abs(omega_c - omega_m) <= tol;
}

void ModelParams::validate() const {
    if (!(omega_m > 0.0) || !std::isfinite(omega_m))
        throw std::invalid_argument("ModelParams: omega_m must be positive and finite");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        throw std::invalid_argument("ModelParams: omega_c must be positive and finite");
    if (!(g >= 0.0) || !std::isfinite(g))
        throw std::invalid_argument("ModelParams: g must be non-negative and finite");
    if (n_tls < 1)
        throw std::invalid_argument("ModelParams: n_tls must be >= 1");
    // The n_max >= N + 2 policy is enforced by the default cutoff; smaller
    // explicit cutoffs are allowed so convergence checks can exhibit failure.
    if (cutoff() < 0)
        throw std::invalid_argument("ModelParams: photon_cutoff must be >= 0");
}

Basis::Basis(const ModelParams& params) : Basis(params.n_tls, params.cutoff()) {
    params.validate();
}

Basis::Basis(int n_tls, int photon_cutoff) : n_tls_(n_tls), n_max_(photon_cutoff) {
    if (n_tls_ < 1 || n_max_ < 0)
        throw std::invalid_argument("Basis: need n_tls >= 1 and photon_cutoff >= 0");
}

int Basis::index(int k, int n) const {
    if (k < 0 || k > n_tls_ || n < 0 || n > n_max_)
        throw std::out_of_range("Basis::index: state (" + std::to_string(k) + "," +
                                std::to_string(n) + ") outside basis");
    return k * (n_max_ + 1) + n;
}

BasisState Basis::state(int flat_index) const {
    if (flat_index < 0 || flat_index >= dim())
        throw std::out_of_range("Basis::state: flat index outside basis");
    return {flat_index / (n_max_ + 1), flat_index % (n_max_ + 1)};
}

std::vector<BasisState> Basis::states() const {
    std::vector<BasisState> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (int k = 0; k <= n_tls_; ++k)
        for (int n = 0; n <= n_max_; ++n) out.push_back({k, n});
    return out;
}

Vector Basis::unit_state(int k, int n) const {
    Vector v = Vector::Zero(dim());
    v(index(k, n)) = 1.0;
    return v;
}

namespace {

// kron(A, B) with the row-major flat index i_A * dim_B + i_B.
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix spin_jplus(int n_tls) {
    const int d = n_tls + 1;
    Matrix jp = Matrix::Zero(d, d);
    for (int k = 0; k + 1 <= n_tls; ++k)
        jp(k + 1, k) = std::sqrt(static_cast<double>(n_tls - k) * (k + 1));
    return jp;
}

} // namespace

Matrix collective_operator(SpinOp op, const ModelParams& params) {
    params.validate();
    const int n_tls = params.n_tls;
    const int d = n_tls + 1;
    Matrix spin;
    switch (op) {
    case SpinOp::Jz: {
        spin = Matrix::Zero(d, d);
        for (int k = 0; k <= n_tls; ++k) spin(k, k) = k - 0.5 * n_tls;
        break;
    }
    case SpinOp::Jplus:
        spin = spin_jplus(n_tls);
        break;
    case SpinOp::Jminus:
        spin = spin_jplus(n_tls).adjoint();
        break;
    case SpinOp::Jx: {
        const Matrix jp = spin_jplus(n_tls);
        spin = jp + jp.adjoint().eval();
        break;
    }
    }
    const int fock_dim = params.cutoff() + 1;
    return kron(spin, Matrix::Identity(fock_dim, fock_dim));
}

Matrix photon_operator(PhotonOp op, const ModelParams& params) {
    params.validate();
    const int fock_dim = params.cutoff() + 1;
    Matrix fock = Matrix::Zero(fock_dim, fock_dim);
    switch (op) {
    case PhotonOp::Annihilate:
        for (int n = 1; n < fock_dim; ++n) fock(n - 1, n) = std::sqrt(static_cast<double>(n));
        break;
    case PhotonOp::Create:
        for (int n = 1; n < fock_dim; ++n) fock(n, n - 1) = std::sqrt(static_cast<double>(n));
        break;
    case PhotonOp::Number:
        for (int n = 0; n < fock_dim; ++n) fock(n, n) = static_cast<double>(n);
        break;
    }
    const int spin_dim = params.n_tls + 1;
    return kron(Matrix::Identity(spin_dim, spin_dim), fock);
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return true;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

} // namespace beatlab
