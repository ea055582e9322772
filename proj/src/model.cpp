#include "acsa/model.hpp"

#include <array>
#include <cmath>
#include <string>

#include "acsa/error.hpp"

namespace acsa {
namespace {

void check_finite_and_signs(const SystemParams& p) {
    const std::array<std::pair<const char*, double>, 8> fields{{
        {"omega_p", p.omega_p},
        {"omega_l", p.omega_l},
        {"phi_p", p.phi_p},
        {"phi_l", p.phi_l},
        {"delta_p", p.delta_p},
        {"delta_l", p.delta_l},
        {"gamma_ca", p.gamma_ca},
        {"gamma_cb", p.gamma_cb},
    }};
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value))
            throw Error(ErrorCode::NonFiniteInput, std::string(name) + " is not finite");
    }
    for (const auto& [name, value] : {std::pair{"omega_p", p.omega_p}, std::pair{"omega_l", p.omega_l},
                                      std::pair{"gamma_ca", p.gamma_ca}, std::pair{"gamma_cb", p.gamma_cb}}) {
        if (value < 0.0)
            throw Error(ErrorCode::NegativeRate, std::string(name) + " must be >= 0");
    }
}

// vec(A X B) = (B^T kron A) vec(X) for column-major vec.
Superoperator kron(const Matrix3& left, const Matrix3& right) {
    Superoperator out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.block<3, 3>(3 * i, 3 * j) = left(i, j) * right;
    return out;
}

Matrix3 jump(Level to, Level from) {
    Matrix3 j = Matrix3::Zero();
    j(index(to), index(from)) = 1.0;
    return j;
}

}  // namespace

void validate_params(const SystemParams& params) {
    check_finite_and_signs(params);
    if (!(params.gamma_cb > 0.0))
        throw Error(ErrorCode::NegativeRate, "gamma_cb must be > 0 (it sets the unit of frequency)");
}

Matrix3 build_hamiltonian(const SystemParams& params) {
    check_finite_and_signs(params);
    const int c = index(Level::c), b = index(Level::b), a = index(Level::a);

    Matrix3 h = Matrix3::Zero();
    h(c, b) = std::polar(params.omega_l, params.phi_l);
    h(c, a) = std::polar(params.omega_p, params.phi_p);
    h(b, c) = std::conj(h(c, b));
    h(a, c) = std::conj(h(c, a));
    h(b, b) = params.delta_l;
    h(a, a) = params.delta_p;
    return h;
}

Superoperator build_liouvillian(const SystemParams& params) {
    const Matrix3 h = build_hamiltonian(params);
    const Matrix3 id = Matrix3::Identity();
    const Complex i_unit{0.0, 1.0};

    Superoperator l = -i_unit * (kron(id, h) - kron(h.transpose(), id));

    const std::array<std::pair<double, Matrix3>, 2> channels{{
        {params.gamma_ca, jump(Level::a, Level::c)},
        {params.gamma_cb, jump(Level::b, Level::c)},
    }};
    for (const auto& [rate, j] : channels) {
        if (rate == 0.0) continue;
        const Matrix3 jdj = j.adjoint() * j;
        l += rate * (kron(j.conjugate(), j) - 0.5 * kron(id, jdj) - 0.5 * kron(jdj.transpose(), id));
    }
    return l;
}

Matrix3 pure_state(Level level) {
    Matrix3 rho = Matrix3::Zero();
    rho(index(level), index(level)) = 1.0;
    return rho;
}

Physicality physicality(const Matrix3& rho) {
    Physicality out;
    out.trace_error = std::abs(rho.trace() - 1.0);
    out.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const Matrix3 hermitian = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix3> solver(hermitian, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = solver.eigenvalues().minCoeff();
    return out;
}

}  // namespace acsa
