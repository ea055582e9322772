#include "acsa/analytic.hpp"

#include <cmath>

#include "acsa/error.hpp"

namespace acsa::analytic {
namespace {

constexpr double kDegenerateDenominator = 1e-14;
constexpr Complex kI{0.0, 1.0};

Complex checked_ratio(Complex numerator, Complex denominator) {
    if (std::abs(denominator) < kDegenerateDenominator)
        throw Error(ErrorCode::DegenerateDenominator, "weak-probe denominator vanishes");
    return numerator / denominator;
}

}  // namespace

double generalized_rabi(double omega_p, double omega_l) { return std::hypot(omega_p, omega_l); }

DressedPair dressed_states(const SystemParams& params) {
    const double r = generalized_rabi(params.omega_p, params.omega_l);
    if (r == 0.0) throw Error(ErrorCode::ZeroField, "dressed states need a nonzero field");

    const double norm = 1.0 / std::sqrt(2.0);
    Vector3 common = Vector3::Zero();
    common(index(Level::a)) = params.omega_p / r;
    common(index(Level::b)) = std::polar(params.omega_l / r, params.delta_phi());

    Vector3 upper = Vector3::Zero();
    upper(index(Level::c)) = std::polar(1.0, -params.phi_p);

    return {norm * (common + upper), norm * (common - upper), r};
}

Complex rho_ac_weak(const SystemParams& p) {
    const double two_photon = p.delta_l - p.delta_p;
    const Complex numerator = -2.0 * kI * two_photon * std::polar(p.omega_p, p.phi_p);
    const Complex denominator = (p.gamma_ca + p.gamma_cb) * two_photon
        + 2.0 * kI * (p.delta_p * two_photon + p.omega_l * p.omega_l);
    return checked_ratio(numerator, denominator);
}

Complex rho_ab_weak(const SystemParams& p) {
    const double two_photon = p.delta_l - p.delta_p;
    const Complex numerator = 2.0 * kI * p.omega_p * p.omega_l * std::polar(1.0, p.delta_phi());
    const Complex denominator = (p.gamma_ca + p.gamma_cb) * two_photon
        - 2.0 * kI * (p.delta_p * two_photon + p.omega_l * p.omega_l);
    return checked_ratio(numerator, denominator);
}

Complex rho_ab_bare(const SystemParams& p) {
    if (p.omega_l == 0.0) throw Error(ErrorCode::ZeroField, "bare-resonance limit needs omega_l > 0");
    return -std::polar(p.omega_p / p.omega_l, p.delta_phi());
}

double dressed_probe_detuning(const SystemParams& p, Branch branch) {
    return branch == Branch::plus ? p.delta_l - p.omega_l : p.delta_l + p.omega_l;
}

Complex rho_ac_dressed(const SystemParams& p, Branch /*branch*/) {
    const Complex denominator{p.gamma_cb + p.gamma_ca, 2.0 * p.delta_l};
    return -2.0 * kI * std::polar(p.omega_p, p.phi_p) / denominator;
}

Complex rho_ab_dressed(const SystemParams& p, Branch branch) {
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    const Complex denominator{p.gamma_cb + p.gamma_ca, -2.0 * p.delta_l};
    return sign * 2.0 * kI * std::polar(p.omega_p, p.delta_phi()) / denominator;
}

}  // namespace acsa::analytic
