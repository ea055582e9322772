#pragma once

#include "acsa/model.hpp"
#include "acsa/types.hpp"

/// Closed-form weak-probe and dressed-state results. These serve as oracles for
/// the numerical steady state and dynamics.
///
/// Coherences follow the sign convention of the ACSA literature: a positive
/// imaginary part of rho_ab means gain, negative means absorption; the real part
/// is the dispersive response.
namespace acsa::analytic {

/// Sideband of the dressed two-photon resonance delta_l - delta_p = +/- omega_l.
enum class Branch { plus, minus };

double generalized_rabi(double omega_p, double omega_l);

struct DressedPair {
    Vector3 plus;
    Vector3 minus;
    double r = 0.0;
};

/// Semiclassical dressed states for a resonant drive (delta_l = 0 is assumed,
/// detunings are ignored). Throws ZeroField when both fields vanish.
DressedPair dressed_states(const SystemParams& params);

/// Weak-probe probe-transition coherence, evaluated as printed in the original
/// derivation. Throws DegenerateDenominator if |denominator| < 1e-14.
Complex rho_ac_weak(const SystemParams& params);

/// Weak-probe coherence of the ac-Stark allowed |a> -> |b> transition.
Complex rho_ab_weak(const SystemParams& params);

/// Bare two-photon resonance limit: rho_ab = -(omega_p / omega_l) e^{i dphi}.
Complex rho_ab_bare(const SystemParams& params);

/// Probe detuning placing the system on the given dressed sideband:
/// delta_p = delta_l - omega_l for Branch::plus, delta_l + omega_l for minus.
double dressed_probe_detuning(const SystemParams& params, Branch branch);

/// rho_ac at dressed resonance. Identical on both branches.
Complex rho_ac_dressed(const SystemParams& params, Branch branch);

/// rho_ab at dressed resonance; the sign follows the branch.
Complex rho_ab_dressed(const SystemParams& params, Branch branch);

}  // namespace acsa::analytic
