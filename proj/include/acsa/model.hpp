#pragma once

#include "acsa/types.hpp"

namespace acsa {

/// Physical inputs of the driven Lambda system. Frequencies and rates are in
/// units of gamma_cb; phases in radians.
///
/// The drive (omega_l, phi_l, delta_l) couples |b> <-> |c>, the probe
/// (omega_p, phi_p, delta_p) couples |a> <-> |c>. Detunings are atomic minus
/// laser frequency. |c> decays to |a> at gamma_ca and to |b> at gamma_cb.
struct SystemParams {
    double omega_p = 0.0;
    double omega_l = 0.0;
    double phi_p = 0.0;
    double phi_l = 0.0;
    double delta_p = 0.0;
    double delta_l = 0.0;
    double gamma_ca = 1.0;
    double gamma_cb = 1.0;

    /// Relative phase between probe and drive.
    double delta_phi() const { return phi_p - phi_l; }

    bool operator==(const SystemParams&) const = default;
};

/// Throws Error(NonFiniteInput) for NaN/Inf and Error(NegativeRate) for
/// negative Rabi frequencies or rates, or gamma_cb <= 0.
void validate_params(const SystemParams& params);

/// Interaction-picture RWA Hamiltonian. Couplings enter without a factor 1/2:
///
///     | 0                 W_L e^{i phi_L}   W_P e^{i phi_P} |
///     | W_L e^{-i phi_L}  D_L               0               |
///     | W_P e^{-i phi_P}  0                 D_P             |
Matrix3 build_hamiltonian(const SystemParams& params);

/// Lindblad generator acting on column-major vec(rho):
/// L = -i[H, .] + sum_k g_k (J_k . J_k^dag - 1/2 {J_k^dag J_k, .}),
/// with J = |a><c| at gamma_ca and J = |b><c| at gamma_cb.
Superoperator build_liouvillian(const SystemParams& params);

/// Density matrix for a basis state.
Matrix3 pure_state(Level level);

struct Physicality {
    double trace_error = 0.0;       // |Tr rho - 1|
    double hermiticity_error = 0.0; // max |rho - rho^dag|
    double min_eigenvalue = 0.0;
};

Physicality physicality(const Matrix3& rho);

}  // namespace acsa
