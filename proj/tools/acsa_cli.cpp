// acsa: steady states, sweeps, phase maps and time-domain spectra of the
// ac-Stark allowed transition in a driven Lambda system.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acsa/config.hpp"
#include "acsa/error.hpp"
#include "acsa/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

int exit_code(acsa::ErrorCategory c) {
    switch (c) {
    case acsa::ErrorCategory::config: return kExitConfig;
    case acsa::ErrorCategory::solver: return kExitSolver;
    case acsa::ErrorCategory::io: return kExitIo;
    }
    return 1;
}

const std::map<std::string, std::string>& key_help() {
    static const std::map<std::string, std::string> help{
        {"omega_p", "probe Rabi frequency"},
        {"omega_l", "drive Rabi frequency"},
        {"phi_p", "probe phase [rad]; accepts pi, pi/2, -0.5*pi"},
        {"phi_l", "drive phase [rad]"},
        {"delta_p", "probe detuning (atomic minus laser)"},
        {"delta_l", "drive detuning"},
        {"gamma_ca", "decay rate |c> -> |a>"},
        {"gamma_cb", "decay rate |c> -> |b> (the unit, default 1)"},
        {"dp_start", "probe-detuning grid start (default -20)"},
        {"dp_stop", "probe-detuning grid stop (default 20)"},
        {"dp_points", "probe-detuning grid points (default 401)"},
        {"phi_start", "relative-phase grid start (default 0)"},
        {"phi_stop", "relative-phase grid stop (default 2pi)"},
        {"phi_points", "relative-phase grid points (default 201)"},
        {"t_final", "integration window (default 102.35)"},
        {"dt", "output sampling step (default 0.05)"},
        {"tol", "integrator tolerance in [1e-12, 1e-4] (default 1e-12)"},
        {"window", "rectangular | hann"},
        {"initial_state", "a | b | c | mixed (default a)"},
        {"subtract_steady", "subtract the steady rho_ab before transforming"},
        {"peak_threshold", "minimum peak prominence relative to the tallest bin (default 1e-3)"},
        {"output", "output file (default: stdout)"},
        {"format", "csv | json"},
    };
    return help;
}

struct Flags {
    std::map<std::string, std::string> values;

    void attach(CLI::App& cmd) {
        for (const auto& [key, help] : key_help()) cmd.add_option("--" + key, values[key], help);
    }

    std::string as_config(std::string_view mode) const {
        std::ostringstream out;
        out << "mode = " << mode << '\n';
        for (const auto& [key, value] : values)
            if (!value.empty()) out << key << " = " << value << '\n';
        return out.str();
    }
};

int run(const acsa::RunConfig& config, std::size_t workers) {
    const auto outcome = acsa::execute(config, std::cout, workers);
    (config.output.empty() ? std::cerr : std::cout) << outcome.summary << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-controlled gain, absorption and dispersion on the ac-Stark allowed transition of a driven "
                 "Lambda system. All frequencies and rates are in units of gamma_cb."};
    app.require_subcommand(1);

    std::size_t workers = 0;
    app.add_option("--workers", workers, "scan worker threads (default: ACSA_WORKERS or hardware concurrency)");

    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> mode_cmds;
    const std::map<std::string, std::string> modes{
        {"steady", "steady state at one parameter point"},
        {"sweep", "steady-state sweep over the probe detuning"},
        {"map", "steady-state map over probe detuning and relative phase"},
        {"spectrum", "time-domain integration and spectrum of rho_ab"},
        {"dressed", "dressed states and dressed-resonance coherences"},
        {"strong-probe", "strong-probe sweeps at four phases plus the gain surface"},
    };
    for (const auto& [name, description] : modes) {
        mode_cmds[name] = app.add_subcommand(name, description);
        flags[name].attach(*mode_cmds[name]);
    }

    std::string preset_id, preset_output, preset_format;
    auto* preset = app.add_subcommand("preset", "run a named preset (fig3a..fig3f, fig4a..fig4e, fig5a..fig5d)");
    preset->add_option("id", preset_id, "preset id")->required();
    preset->add_option("--output", preset_output, "output file (default: <id>.csv)");
    preset->add_option("--format", preset_format, "csv | json");

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "run a configuration file (key = value lines or a JSON object)");
    run_cmd->add_option("config", config_path, "configuration file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        for (const auto& [name, cmd] : mode_cmds)
            if (cmd->parsed()) return run(acsa::parse_config(flags[name].as_config(name)), workers);

        if (preset->parsed()) {
            auto config = acsa::expand_preset(preset_id);
            if (!config) {
                std::cerr << "unknown preset '" << preset_id << "'\n";
                return kExitConfig;
            }
            if (!preset_output.empty()) config->output = preset_output;
            if (preset_format == "json") {
                config->format = acsa::OutputFormat::json;
                if (preset_output.empty()) config->output = preset_id + ".json";
            }
            else if (!preset_format.empty() && preset_format != "csv") {
                std::cerr << "unknown format '" << preset_format << "'\n";
                return kExitConfig;
            }
            return run(*config, workers);
        }

        std::ifstream in(config_path);
        std::stringstream text;
        text << in.rdbuf();
        return run(acsa::parse_config(text.str()), workers);
    } catch (const acsa::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(acsa::category(e.code()));
    }
}
