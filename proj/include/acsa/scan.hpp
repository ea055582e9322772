#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acsa/error.hpp"
#include "acsa/model.hpp"
#include "acsa/types.hpp"

namespace acsa {

/// Uniform grid of `points` values from start to stop inclusive.
struct Grid1D {
    double start = 0.0;
    double stop = 1.0;
    std::size_t points = 2;

    void validate() const;  // throws InvalidGrid
    double step() const { return (stop - start) / static_cast<double>(points - 1); }
    double at(std::size_t i) const;

    bool operator==(const Grid1D&) const = default;
};

/// Default probe-detuning axis [-20, 20] with 401 points (step 0.1).
Grid1D default_detuning_grid();
/// Default relative-phase axis [0, 2 pi] with 201 points.
Grid1D default_phase_grid();

struct ScanRecord {
    double delta_p = 0.0;
    double delta_phi = 0.0;
    Complex rho_ab{};
    Complex rho_ac{};
    double pop_a = 0.0;
    double pop_b = 0.0;
    double pop_c = 0.0;
    double residual = 0.0;
    std::optional<ErrorCode> error;  // set when the steady-state solve failed

    bool ok() const { return !error.has_value(); }
};

/// Steady-state records over one (delta_p) or two (delta_p outer, delta_phi
/// inner) axes, stored row-major.
struct ScanTable {
    std::vector<double> delta_p_axis;
    std::vector<double> delta_phi_axis;  // empty for detuning sweeps
    std::vector<ScanRecord> records;
    SystemParams params;

    bool is_map() const { return !delta_phi_axis.empty(); }
    const ScanRecord& at(std::size_t i_dp, std::size_t j_phi = 0) const;
    std::size_t failures() const;
};

struct ScanOptions {
    std::size_t workers = 0;  // 0: default_workers()
};

/// Solves the steady state for one parameter point, capturing solver errors.
ScanRecord solve_point(const SystemParams& params);

ScanTable sweep_detuning(const SystemParams& params, const Grid1D& delta_p_grid, const ScanOptions& options = {});

/// Map over (delta_p, delta_phi). The relative phase is applied to the probe,
/// phi_p = phi_l + delta_phi, with phi_l held at its value in params.
ScanTable map_phase_detuning(const SystemParams& params, const Grid1D& delta_p_grid, const Grid1D& delta_phi_grid,
                             const ScanOptions& options = {});

/// Strong-probe study: detuning sweeps at delta_phi in {0, pi/2, pi, -pi/2}
/// plus the full (delta_p, delta_phi) surface.
struct StrongProbeSuite {
    std::vector<double> phases;
    std::vector<ScanTable> sweeps;  // one per entry of phases
    ScanTable surface;
};

constexpr double kStrongProbeOmega = 4.5;

StrongProbeSuite strong_probe_suite(const SystemParams& params, const Grid1D& delta_p_grid,
                                    const Grid1D& delta_phi_grid, const ScanOptions& options = {});

}  // namespace acsa
