#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "acsa/model.hpp"

namespace acsa::testing {

/// gamma_ca = gamma_cb = 1, omega_l = 10, omega_p = 0.37, everything else 0.
inline SystemParams weak_probe_params() {
    SystemParams p;
    p.omega_l = 10.0;
    p.omega_p = 0.37;
    return p;
}

/// Time-domain parameters: omega_l = 10, omega_p = 0.1, delta_l = 0, dphi = 0.
inline SystemParams time_domain_params(double delta_p) {
    SystemParams p;
    p.omega_l = 10.0;
    p.omega_p = 0.1;
    p.delta_p = delta_p;
    return p;
}

inline SystemParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rabi(0.05, 12.0), phase(-M_PI, M_PI), det(-25.0, 25.0), rate(0.1, 3.0);
    SystemParams p;
    p.omega_p = rabi(rng);
    p.omega_l = rabi(rng);
    p.phi_p = phase(rng);
    p.phi_l = phase(rng);
    p.delta_p = det(rng);
    p.delta_l = det(rng);
    p.gamma_ca = rate(rng);
    p.gamma_cb = rate(rng);
    return p;
}

inline Matrix3 random_hermitian(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = {n(rng), n(rng)};
    return 0.5 * (m + m.adjoint());
}

/// Independent O(N^2) reference for X(nu) = sum_k x_k exp(+i (nu - carrier) k dt).
inline std::complex<double> direct_transform(std::span<const std::complex<double>> x, double dt, double carrier,
                                             double nu) {
    std::complex<double> sum{};
    for (std::size_t k = 0; k < x.size(); ++k)
        sum += x[k] * std::polar(1.0, (nu - carrier) * dt * static_cast<double>(k));
    return sum;
}

}  // namespace acsa::testing
