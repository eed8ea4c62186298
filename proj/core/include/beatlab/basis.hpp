// basis.hpp — Symmetric collective-spin ⊗ truncated-Fock product basis and operators

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace beatlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Physical parameters of a single model instance. Dimensionless units
// (frequencies in units of a reference frequency, typically omega = 1).
struct ModelParams {
    double omega_m{1.0};   // TLS frequency
    double omega_c{1.0};   // cavity frequency
    double g{0.07};        // coupling strength
    int n_tls{2};          // number of two-level systems N
    int photon_cutoff{-1}; // max Fock number n_max; -1 selects the default N + 6

    int cutoff() const { return photon_cutoff < 0 ? n_tls + 6 : photon_cutoff; }
    double detuning() const { return omega_c - omega_m; }
    bool resonant(double tol = 1e-12) const;

    // Throws std::invalid_argument on violation of the parameter domain.
    void validate() const;
};

// One product state |s_k, n>: k excited TLS in the symmetric ladder, n photons.
struct BasisState {
    int k_excitations{0};
    int n_photons{0};
};

// Flat-index bijection over the (N+1)(n_max+1) product space,
// index = k * (n_max + 1) + n.
class Basis {
public:
    explicit Basis(const ModelParams& params);
    Basis(int n_tls, int photon_cutoff);

    int n_tls() const { return n_tls_; }
    int n_max() const { return n_max_; }
    int dim() const { return (n_tls_ + 1) * (n_max_ + 1); }

    int index(int k, int n) const;
    int index(const BasisState& s) const { return index(s.k_excitations, s.n_photons); }
    BasisState state(int flat_index) const;

    std::vector<BasisState> states() const;

    // Unit vector on |s_k, n>.
    Vector unit_state(int k, int n) const;

private:
    int n_tls_;
    int n_max_;
};

enum class SpinOp { Jz, Jplus, Jminus, Jx };
enum class PhotonOp { Annihilate, Create, Number };

// Collective spin operator on the symmetric ladder j = N/2, tensored with the
// Fock identity. Convention: J_+|s_k> = sqrt((N-k)(k+1)) |s_{k+1}>,
// J_z|s_k> = (k - N/2)|s_k>, J_x = J_+ + J_- (no factor 1/2).
Matrix collective_operator(SpinOp op, const ModelParams& params);

// Cavity mode operator truncated at n_max (a^dag|n_max> = 0), tensored with
// the spin identity.
Matrix photon_operator(PhotonOp op, const ModelParams& params);

// True iff m equals its conjugate transpose within tol relative to the
// largest magnitude entry.
bool is_hermitian(const Matrix& m, double tol = 1e-12);

} // namespace beatlab
