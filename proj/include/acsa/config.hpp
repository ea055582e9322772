#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acsa/dynamics.hpp"
#include "acsa/model.hpp"
#include "acsa/scan.hpp"

namespace acsa {

enum class Mode { steady, sweep, map, spectrum, dressed, strong_probe };
enum class OutputFormat { csv, json };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);
std::string_view to_string(OutputFormat format);

struct DynamicsSettings {
    double t_final = 102.35;  // 2048 samples at dt = 0.05
    double dt = 0.05;
    double tol = 1e-12;
    Window window = Window::rectangular;
    InitialState initial_state = InitialState::a;
    bool subtract_steady = false;
    double peak_threshold = 1e-3;  // minimum prominence relative to the tallest bin

    bool operator==(const DynamicsSettings&) const = default;
};

/// Everything needed to run one computation. All frequencies and rates are in
/// units of gamma_cb.
struct RunConfig {
    Mode mode = Mode::steady;
    SystemParams params;
    Grid1D delta_p_grid = default_detuning_grid();
    Grid1D delta_phi_grid = default_phase_grid();
    DynamicsSettings dynamics;
    std::string output;  // empty: stdout
    OutputFormat format = OutputFormat::csv;

    bool operator==(const RunConfig&) const = default;
};

/// Recognised keys, in serialization order.
const std::vector<std::string_view>& config_keys();

/// Parses either the flat format (one `key = value` per line, `#` starts a
/// comment) or a single JSON object with the same keys. Real values accept
/// plain numbers and multiples of pi such as `pi/2`, `-0.5*pi`, `3pi/2`.
///
/// Throws ParseError (with line and key), UnknownKey, MissingRequired (mode),
/// and the validation errors of the parameters, grids and dynamics settings.
RunConfig parse_config(std::string_view text);

/// Flat-format text that parses back to an identical RunConfig.
std::string serialize_config(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);

/// Checks parameters, grids and dynamics settings.
void validate_config(const RunConfig& config);

/// Named parameter presets fig3a..fig3f, fig4a..fig4e, fig5a..fig5d.
const std::vector<std::string_view>& preset_ids();
std::optional<RunConfig> expand_preset(std::string_view id);

}  // namespace acsa
