#include "acsa/scan.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "acsa/parallel.hpp"
#include "acsa/steady.hpp"

namespace acsa {

void Grid1D::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
        throw Error(ErrorCode::InvalidGrid, "grid needs finite start < stop");
    if (points < 2) throw Error(ErrorCode::InvalidGrid, "grid needs at least two points");
}

double Grid1D::at(std::size_t i) const {
    if (i + 1 == points) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

Grid1D default_detuning_grid() { return {-20.0, 20.0, 401}; }
Grid1D default_phase_grid() { return {0.0, 2.0 * std::numbers::pi, 201}; }

const ScanRecord& ScanTable::at(std::size_t i_dp, std::size_t j_phi) const {
    const std::size_t inner = is_map() ? delta_phi_axis.size() : 1;
    return records.at(i_dp * inner + j_phi);
}

std::size_t ScanTable::failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.ok() ? 0 : 1;
    return n;
}

ScanRecord solve_point(const SystemParams& params) {
    ScanRecord rec;
    rec.delta_p = params.delta_p;
    rec.delta_phi = params.delta_phi();
    try {
        validate_params(params);
        const auto ss = steady_state(build_liouvillian(params));
        rec.rho_ab = coherence(ss.rho, CoherencePair::ab);
        rec.rho_ac = coherence(ss.rho, CoherencePair::ac);
        rec.pop_a = ss.rho(index(Level::a), index(Level::a)).real();
        rec.pop_b = ss.rho(index(Level::b), index(Level::b)).real();
        rec.pop_c = ss.rho(index(Level::c), index(Level::c)).real();
        rec.residual = ss.residual;
    } catch (const Error& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        rec.rho_ab = rec.rho_ac = {nan, nan};
        rec.pop_a = rec.pop_b = rec.pop_c = rec.residual = nan;
        rec.error = e.code();
    }
    return rec;
}

ScanTable sweep_detuning(const SystemParams& params, const Grid1D& delta_p_grid, const ScanOptions& options) {
    validate_params(params);
    delta_p_grid.validate();

    ScanTable table;
    table.params = params;
    table.delta_p_axis.resize(delta_p_grid.points);
    for (std::size_t i = 0; i < delta_p_grid.points; ++i) table.delta_p_axis[i] = delta_p_grid.at(i);
    table.records.resize(delta_p_grid.points);

    parallel_for_index(delta_p_grid.points, options.workers, [&](std::size_t i) {
        SystemParams point = params;
        point.delta_p = table.delta_p_axis[i];
        table.records[i] = solve_point(point);
    });
    return table;
}

ScanTable map_phase_detuning(const SystemParams& params, const Grid1D& delta_p_grid, const Grid1D& delta_phi_grid,
                             const ScanOptions& options) {
    validate_params(params);
    delta_p_grid.validate();
    delta_phi_grid.validate();

    ScanTable table;
    table.params = params;
    table.delta_p_axis.resize(delta_p_grid.points);
    table.delta_phi_axis.resize(delta_phi_grid.points);
    for (std::size_t i = 0; i < delta_p_grid.points; ++i) table.delta_p_axis[i] = delta_p_grid.at(i);
    for (std::size_t j = 0; j < delta_phi_grid.points; ++j) table.delta_phi_axis[j] = delta_phi_grid.at(j);

    const std::size_t inner = delta_phi_grid.points;
    table.records.resize(delta_p_grid.points * inner);
    parallel_for_index(table.records.size(), options.workers, [&](std::size_t k) {
        SystemParams point = params;
        point.delta_p = table.delta_p_axis[k / inner];
        point.phi_p = params.phi_l + table.delta_phi_axis[k % inner];
        ScanRecord rec = solve_point(point);
        rec.delta_phi = table.delta_phi_axis[k % inner];
        table.records[k] = rec;
    });
    return table;
}

StrongProbeSuite strong_probe_suite(const SystemParams& params, const Grid1D& delta_p_grid,
                                    const Grid1D& delta_phi_grid, const ScanOptions& options) {
    StrongProbeSuite suite;
    suite.phases = {0.0, std::numbers::pi / 2, std::numbers::pi, -std::numbers::pi / 2};
    for (double phase : suite.phases) {
        SystemParams p = params;
        p.phi_p = params.phi_l + phase;
        ScanTable t = sweep_detuning(p, delta_p_grid, options);
        for (auto& r : t.records) r.delta_phi = phase;
        suite.sweeps.push_back(std::move(t));
    }
    suite.surface = map_phase_detuning(params, delta_p_grid, delta_phi_grid, options);
    return suite;
}

}  // namespace acsa
