#include "acsa/runner.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "acsa/analytic.hpp"
#include "acsa/error.hpp"
#include "acsa/io.hpp"
#include "acsa/steady.hpp"

namespace acsa {
namespace {

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string table_summary(const ScanTable& t) {
    const ScanRecord* hi = nullptr;
    const ScanRecord* lo = nullptr;
    for (const auto& r : t.records) {
        if (!r.ok()) continue;
        if (!hi || r.rho_ab.imag() > hi->rho_ab.imag()) hi = &r;
        if (!lo || r.rho_ab.imag() < lo->rho_ab.imag()) lo = &r;
    }
    if (!hi) return "all points failed";
    auto where = [&t](const ScanRecord& r) {
        std::string s = "delta_p=" + fixed(r.delta_p);
        if (t.is_map()) s += ", delta_phi=" + fixed(r.delta_phi);
        return s;
    };
    return "max Im rho_ab " + fixed(hi->rho_ab.imag(), 6) + " at " + where(*hi) + "; min Im rho_ab "
        + fixed(lo->rho_ab.imag(), 6) + " at " + where(*lo) + "; failed " + std::to_string(t.failures()) + "/"
        + std::to_string(t.records.size());
}

class Emitter {
public:
    Emitter(const RunConfig& config, std::ostream& sink) : config_(config), sink_(sink) {}

    void emit(const std::filesystem::path& path, const std::string& csv, nlohmann::json data, nlohmann::json meta) {
        meta["config"] = to_json(config_);
        if (config_.format == OutputFormat::json) {
            const std::string doc = nlohmann::json{{"metadata", meta}, {"data", std::move(data)}}.dump(2) + "\n";
            if (path.empty()) sink_ << doc;
            else {
                write_file(path, doc);
                files.push_back(path);
            }
            return;
        }
        if (path.empty()) {
            sink_ << csv;
            return;
        }
        write_file(path, csv);
        write_file(metadata_path(path), meta.dump(2) + "\n");
        files.push_back(path);
        files.push_back(metadata_path(path));
    }

    std::filesystem::path path_with_suffix(const std::string& suffix) const {
        if (config_.output.empty()) return {};
        std::filesystem::path p(config_.output);
        const auto ext = p.extension();
        p.replace_filename(p.stem().string() + suffix + ext.string());
        return p;
    }

    std::vector<std::filesystem::path> files;

private:
    const RunConfig& config_;
    std::ostream& sink_;
};

template <typename T>
std::string csv_of(const T& value) {
    std::ostringstream out;
    write_csv(value, out);
    return out.str();
}

}  // namespace

RunOutcome execute(const RunConfig& config, std::ostream& data_sink, std::size_t workers) {
    validate_config(config);
    Emitter emitter(config, data_sink);
    const std::filesystem::path out_path = config.output;
    const ScanOptions scan_options{workers};
    RunOutcome outcome;

    switch (config.mode) {
    case Mode::steady: {
        ScanRecord rec = solve_point(config.params);
        if (!rec.ok()) throw Error(*rec.error, "steady-state solve failed");
        ScanTable t;
        t.params = config.params;
        t.delta_p_axis = {config.params.delta_p};
        t.records = {rec};
        emitter.emit(out_path, csv_of(t), to_json(t), {{"residual_stats", residual_stats(t)}});
        outcome.summary = "rho_ab=" + fixed(rec.rho_ab.real(), 6) + (rec.rho_ab.imag() < 0 ? "" : "+")
            + fixed(rec.rho_ab.imag(), 6) + "i rho_ac=" + fixed(rec.rho_ac.real(), 6)
            + (rec.rho_ac.imag() < 0 ? "" : "+") + fixed(rec.rho_ac.imag(), 6) + "i populations(a,b,c)=("
            + fixed(rec.pop_a, 6) + "," + fixed(rec.pop_b, 6) + "," + fixed(rec.pop_c, 6) + ")";
        break;
    }
    case Mode::sweep: {
        const ScanTable t = sweep_detuning(config.params, config.delta_p_grid, scan_options);
        emitter.emit(out_path, csv_of(t), to_json(t), {{"residual_stats", residual_stats(t)}});
        outcome.summary = table_summary(t);
        break;
    }
    case Mode::map: {
        const ScanTable t = map_phase_detuning(config.params, config.delta_p_grid, config.delta_phi_grid, scan_options);
        emitter.emit(out_path, csv_of(t), to_json(t), {{"residual_stats", residual_stats(t)}});
        outcome.summary = table_summary(t);
        break;
    }
    case Mode::strong_probe: {
        const auto suite = strong_probe_suite(config.params, config.delta_p_grid, config.delta_phi_grid, scan_options);
        const std::array<std::string, 4> names{"_dphi_0", "_dphi_pi_2", "_dphi_pi", "_dphi_minus_pi_2"};
        for (std::size_t k = 0; k < suite.sweeps.size(); ++k) {
            const auto& t = suite.sweeps[k];
            emitter.emit(emitter.path_with_suffix(names[k]), csv_of(t), to_json(t),
                         {{"delta_phi", suite.phases[k]}, {"residual_stats", residual_stats(t)}});
        }
        emitter.emit(emitter.path_with_suffix("_surface"), csv_of(suite.surface), to_json(suite.surface),
                     {{"residual_stats", residual_stats(suite.surface)}});
        outcome.summary = "dphi=-pi/2: " + table_summary(suite.sweeps[3]);
        break;
    }
    case Mode::spectrum: {
        const auto grid = TimeGrid::covering(config.dynamics.t_final, config.dynamics.dt);
        const auto traj = evolve(config.params, initial_density(config.dynamics.initial_state), grid,
                                 config.dynamics.tol, std::string(to_string(config.dynamics.initial_state)));
        const auto spec = spectrum(traj, {config.dynamics.window, config.dynamics.subtract_steady, CoherencePair::ab});
        const double tallest = *std::max_element(spec.amplitude.begin(), spec.amplitude.end());
        const auto peaks = find_peaks(spec, config.dynamics.peak_threshold * tallest);

        nlohmann::json peak_list = nlohmann::json::array();
        for (const auto& p : peaks) peak_list.push_back(to_json(p));
        nlohmann::json meta{{"samples", grid.samples},
                            {"resolution", spec.resolution},
                            {"carrier", spec.carrier},
                            {"frequency_convention",
                             "X(nu) = sum_k rho_ab(t_k) exp(+i (nu - carrier) t_k), carrier = delta_p - delta_l"},
                            {"peaks", peak_list}};
        emitter.emit(out_path, csv_of(spec), to_json(spec), meta);

        std::string s = "peaks:";
        for (std::size_t k = 0; k < std::min<std::size_t>(peaks.size(), 5); ++k)
            s += " nu=" + fixed(peaks[k].nu_center) + " (height " + fixed(peaks[k].height, 3) + ")";
        outcome.summary = peaks.empty() ? "no peaks above threshold" : s;
        break;
    }
    case Mode::dressed: {
        const auto pair = analytic::dressed_states(config.params);
        const auto p = config.params;
        auto at_branch = [&p](analytic::Branch b) {
            SystemParams q = p;
            q.delta_p = analytic::dressed_probe_detuning(p, b);
            return q;
        };
        auto cplx = [](Complex z) { return nlohmann::json{z.real(), z.imag()}; };
        nlohmann::json meta{
            {"generalized_rabi", pair.r},
            {"branch_plus", {{"delta_p", at_branch(analytic::Branch::plus).delta_p},
                             {"rho_ab", cplx(analytic::rho_ab_dressed(p, analytic::Branch::plus))},
                             {"rho_ac", cplx(analytic::rho_ac_dressed(p, analytic::Branch::plus))}}},
            {"branch_minus", {{"delta_p", at_branch(analytic::Branch::minus).delta_p},
                              {"rho_ab", cplx(analytic::rho_ab_dressed(p, analytic::Branch::minus))},
                              {"rho_ac", cplx(analytic::rho_ac_dressed(p, analytic::Branch::minus))}}},
        };
        emitter.emit(out_path, csv_of(pair), to_json(pair), meta);
        outcome.summary = "R=" + fixed(pair.r, 6) + "; dressed resonances at delta_p="
            + fixed(at_branch(analytic::Branch::plus).delta_p) + " and "
            + fixed(at_branch(analytic::Branch::minus).delta_p);
        break;
    }
    }
    outcome.files = emitter.files;
    return outcome;
}

}  // namespace acsa
