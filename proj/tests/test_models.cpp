#include <cmath>

#include "doctest.h"

#include "beatlab/models.hpp"

using namespace beatlab;

namespace {

ModelParams make_params(int n_tls = 2, double g = 0.07) {
    ModelParams p;
    p.n_tls = n_tls;
    p.g = g;
    return p;
}

double commutator_norm(const Matrix& a, const Matrix& b) {
    return (a * b - b * a).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("decoupled limit: all three models coincide and are diagonal") {
    ModelParams params = make_params(2, 0.0);
    const Matrix tc = build_hamiltonian(ModelKind::TC, params);
    const Matrix dm = build_hamiltonian(ModelKind::DM, params);
    const Matrix pf = build_hamiltonian(ModelKind::PF, params);
    CHECK((tc - dm).cwiseAbs().maxCoeff() == 0.0);
    CHECK((dm - pf).cwiseAbs().maxCoeff() == 0.0);

    const Basis basis(params);
    for (int i = 0; i < basis.dim(); ++i) {
        const BasisState s = basis.state(i);
        CHECK(tc(i, i).real() ==
              doctest::Approx(params.omega_m * (s.k_excitations - 1.0) +
                              params.omega_c * s.n_photons));
        for (int j = 0; j < basis.dim(); ++j)
            if (i != j) CHECK(std::abs(tc(i, j)) == 0.0);
    }
}

TEST_CASE("hermiticity and term decomposition") {
    for (int n_tls : {2, 3, 5}) {
        const ModelParams params = make_params(n_tls);
        const Matrix tc = build_hamiltonian(ModelKind::TC, params);
        const Matrix dm = build_hamiltonian(ModelKind::DM, params);
        const Matrix pf = build_hamiltonian(ModelKind::PF, params);
        CHECK(is_hermitian(tc));
        CHECK(is_hermitian(dm));
        CHECK(is_hermitian(pf));
        CHECK((dm - tc - crw_term(params)).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((pf - dm - dse_term(params)).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("TC conserves the excitation number, DM and PF do not") {
    const ModelParams params = make_params();
    const Matrix exc = excitation_number(params);
    CHECK(commutator_norm(build_hamiltonian(ModelKind::TC, params), exc) < 1e-12);
    CHECK(commutator_norm(build_hamiltonian(ModelKind::DM, params), exc) > 1e-3);
    CHECK(commutator_norm(build_hamiltonian(ModelKind::PF, params), exc) > 1e-3);
}

TEST_CASE("CRW term") {
    SUBCASE("matrix element from the ground state is g for any N") {
        for (int n_tls : {2, 3, 4, 8}) {
            const ModelParams params = make_params(n_tls);
            const Basis basis(params);
            const Matrix crw = crw_term(params);
            CHECK(crw(basis.index(1, 1), basis.index(0, 0)).real() ==
                  doctest::Approx(params.g).epsilon(1e-14));
        }
    }
    SUBCASE("changes the excitation number by exactly 2") {
        const ModelParams params = make_params();
        const Basis basis(params);
        const Matrix crw = crw_term(params);
        for (int i = 0; i < basis.dim(); ++i)
            for (int j = 0; j < basis.dim(); ++j) {
                const BasisState si = basis.state(i), sj = basis.state(j);
                const int di = (si.k_excitations + si.n_photons) -
                               (sj.k_excitations + sj.n_photons);
                if (std::abs(di) != 2) CHECK(std::abs(crw(i, j)) == 0.0);
            }
    }
    SUBCASE("vanishes at g = 0") {
        CHECK(crw_term(make_params(2, 0.0)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("DSE term") {
    const ModelParams params = make_params();
    const Matrix dse = dse_term(params);

    SUBCASE("Frobenius norm scales as g^2") {
        ModelParams doubled = params;
        doubled.g = 2.0 * params.g;
        CHECK(dse_term(doubled).norm() == doctest::Approx(4.0 * dse.norm()).epsilon(1e-12));
    }
    SUBCASE("positive semidefinite") {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(dse);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-14);
    }
    SUBCASE("an order of magnitude below the CRW term at g = 0.07, N = 2") {
        CHECK(dse.operatorNorm() * 10.0 < crw_term(params).operatorNorm());
    }
}

TEST_CASE("model kind parsing") {
    CHECK(parse_model_kind("tc") == ModelKind::TC);
    CHECK(parse_model_kind("DM") == ModelKind::DM);
    CHECK(parse_model_kind("pf") == ModelKind::PF);
    CHECK_THROWS_AS(parse_model_kind("xx"), std::invalid_argument);
    CHECK(to_string(ModelKind::DM) == "dm");
}
