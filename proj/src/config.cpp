#include "acsa/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "acsa/error.hpp"
#include "acsa/io.hpp"

namespace acsa {
namespace {

using KeyValues = std::map<std::string, std::pair<std::string, int>>;  // key -> (value, line)

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// number | [number][*]pi[/number]
std::optional<double> parse_real_text(std::string_view s) {
    s = trim(s);
    if (auto plain = parse_number(s)) return plain;

    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) return std::nullopt;

    std::string_view coeff_text = trim(s.substr(0, pi_pos));
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text = trim(coeff_text.substr(0, coeff_text.size() - 1));
    double coeff = 1.0;
    if (coeff_text == "-") coeff = -1.0;
    else if (!coeff_text.empty() && coeff_text != "+") {
        auto c = parse_number(coeff_text);
        if (!c) return std::nullopt;
        coeff = *c;
    }

    std::string_view rest = trim(s.substr(pi_pos + 2));
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') return std::nullopt;
        auto d = parse_number(rest.substr(1));
        if (!d || *d == 0.0) return std::nullopt;
        divisor = *d;
    }
    return coeff * std::numbers::pi / divisor;
}

[[noreturn]] void parse_error(const std::string& key, int line, const std::string& why) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : "";
    throw Error(ErrorCode::ParseError, where + "key '" + key + "': " + why);
}

KeyValues read_flat(std::string_view text) {
    KeyValues kv;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": empty key");
        if (!kv.emplace(key, std::pair{value, line_no}).second) parse_error(key, line_no, "duplicate key");
    }
    return kv;
}

KeyValues read_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "JSON config must be an object");

    KeyValues kv;
    for (const auto& [key, value] : doc.items()) {
        std::string text_value;
        if (value.is_string()) text_value = value.get<std::string>();
        else if (value.is_boolean()) text_value = value.get<bool>() ? "true" : "false";
        else if (value.is_number_integer()) text_value = std::to_string(value.get<long long>());
        else if (value.is_number()) text_value = format_double(value.get<double>());
        else parse_error(key, 0, "value must be a string, number or boolean");
        kv.emplace(key, std::pair{text_value, 0});
    }
    return kv;
}

class Reader {
public:
    explicit Reader(KeyValues kv) : kv_(std::move(kv)) {
        const auto& known = config_keys();
        for (const auto& [key, entry] : kv_) {
            if (std::find(known.begin(), known.end(), key) == known.end())
                throw Error(ErrorCode::UnknownKey, (entry.second > 0 ? "line " + std::to_string(entry.second) + ": " : "")
                                                       + "'" + key + "'");
        }
    }

    bool has(const std::string& key) const { return kv_.contains(key); }

    void real(const std::string& key, double& out) const {
        if (auto it = kv_.find(key); it != kv_.end()) {
            auto v = parse_real_text(it->second.first);
            if (!v) parse_error(key, it->second.second, "expected a real number, got '" + it->second.first + "'");
            out = *v;
        }
    }

    void count(const std::string& key, std::size_t& out) const {
        if (auto it = kv_.find(key); it != kv_.end()) {
            const std::string& s = it->second.first;
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                parse_error(key, it->second.second, "expected a non-negative integer, got '" + s + "'");
            out = v;
        }
    }

    void boolean(const std::string& key, bool& out) const {
        if (auto it = kv_.find(key); it != kv_.end()) {
            const std::string& s = it->second.first;
            if (s == "true" || s == "1") out = true;
            else if (s == "false" || s == "0") out = false;
            else parse_error(key, it->second.second, "expected true or false, got '" + s + "'");
        }
    }

    void string(const std::string& key, std::string& out) const {
        if (auto it = kv_.find(key); it != kv_.end()) out = it->second.first;
    }

    template <typename T, typename ParseFn>
    void choice(const std::string& key, T& out, ParseFn parse) const {
        if (auto it = kv_.find(key); it != kv_.end()) {
            auto v = parse(it->second.first);
            if (!v) parse_error(key, it->second.second, "unrecognised value '" + it->second.first + "'");
            out = *v;
        }
    }

private:
    KeyValues kv_;
};

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::steady: return "steady";
    case Mode::sweep: return "sweep";
    case Mode::map: return "map";
    case Mode::spectrum: return "spectrum";
    case Mode::dressed: return "dressed";
    case Mode::strong_probe: return "strong-probe";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view text) {
    for (auto m : {Mode::steady, Mode::sweep, Mode::map, Mode::spectrum, Mode::dressed, Mode::strong_probe})
        if (to_string(m) == text) return m;
    return std::nullopt;
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys{
        "mode",      "omega_p",    "omega_l",  "phi_p",   "phi_l",         "delta_p",
        "delta_l",   "gamma_ca",   "gamma_cb", "dp_start", "dp_stop",      "dp_points",
        "phi_start", "phi_stop",   "phi_points", "t_final", "dt",          "tol",
        "window",    "initial_state", "subtract_steady", "peak_threshold", "output", "format",
    };
    return keys;
}

void validate_config(const RunConfig& c) {
    validate_params(c.params);
    c.delta_p_grid.validate();
    c.delta_phi_grid.validate();
    const auto& d = c.dynamics;
    if (!(d.tol >= 1e-12 && d.tol <= 1e-4)) throw Error(ErrorCode::InvalidOption, "tol must lie in [1e-12, 1e-4]");
    if (!(d.peak_threshold >= 0.0 && d.peak_threshold < 1.0))
        throw Error(ErrorCode::InvalidOption, "peak_threshold must lie in [0, 1)");
    TimeGrid::covering(d.t_final, d.dt);
}

RunConfig parse_config(std::string_view text) {
    const std::string_view body = trim(text);
    const Reader r(!body.empty() && body.front() == '{' ? read_json(body) : read_flat(text));

    RunConfig c;
    r.choice("mode", c.mode, parse_mode);
    r.real("omega_p", c.params.omega_p);
    r.real("omega_l", c.params.omega_l);
    r.real("phi_p", c.params.phi_p);
    r.real("phi_l", c.params.phi_l);
    r.real("delta_p", c.params.delta_p);
    r.real("delta_l", c.params.delta_l);
    r.real("gamma_ca", c.params.gamma_ca);
    r.real("gamma_cb", c.params.gamma_cb);
    r.real("dp_start", c.delta_p_grid.start);
    r.real("dp_stop", c.delta_p_grid.stop);
    r.count("dp_points", c.delta_p_grid.points);
    r.real("phi_start", c.delta_phi_grid.start);
    r.real("phi_stop", c.delta_phi_grid.stop);
    r.count("phi_points", c.delta_phi_grid.points);
    r.real("t_final", c.dynamics.t_final);
    r.real("dt", c.dynamics.dt);
    r.real("tol", c.dynamics.tol);
    r.choice("window", c.dynamics.window, parse_window);
    r.choice("initial_state", c.dynamics.initial_state, parse_initial_state);
    r.boolean("subtract_steady", c.dynamics.subtract_steady);
    r.real("peak_threshold", c.dynamics.peak_threshold);
    r.string("output", c.output);
    r.choice("format", c.format, parse_format);

    if (!r.has("mode")) throw Error(ErrorCode::MissingRequired, "mode");
    validate_config(c);
    return c;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    auto line = [&out](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    line("mode", std::string(to_string(c.mode)));
    line("omega_p", format_double(c.params.omega_p));
    line("omega_l", format_double(c.params.omega_l));
    line("phi_p", format_double(c.params.phi_p));
    line("phi_l", format_double(c.params.phi_l));
    line("delta_p", format_double(c.params.delta_p));
    line("delta_l", format_double(c.params.delta_l));
    line("gamma_ca", format_double(c.params.gamma_ca));
    line("gamma_cb", format_double(c.params.gamma_cb));
    line("dp_start", format_double(c.delta_p_grid.start));
    line("dp_stop", format_double(c.delta_p_grid.stop));
    line("dp_points", std::to_string(c.delta_p_grid.points));
    line("phi_start", format_double(c.delta_phi_grid.start));
    line("phi_stop", format_double(c.delta_phi_grid.stop));
    line("phi_points", std::to_string(c.delta_phi_grid.points));
    line("t_final", format_double(c.dynamics.t_final));
    line("dt", format_double(c.dynamics.dt));
    line("tol", format_double(c.dynamics.tol));
    line("window", std::string(to_string(c.dynamics.window)));
    line("initial_state", std::string(to_string(c.dynamics.initial_state)));
    line("subtract_steady", c.dynamics.subtract_steady ? "true" : "false");
    line("peak_threshold", format_double(c.dynamics.peak_threshold));
    if (!c.output.empty()) line("output", c.output);
    line("format", std::string(to_string(c.format)));
    return out.str();
}

nlohmann::json to_json(const RunConfig& c) {
    return {
        {"mode", to_string(c.mode)},
        {"units", "frequencies and rates in units of gamma_cb, phases in radians"},
        {"params",
         {{"omega_p", c.params.omega_p},
          {"omega_l", c.params.omega_l},
          {"phi_p", c.params.phi_p},
          {"phi_l", c.params.phi_l},
          {"delta_p", c.params.delta_p},
          {"delta_l", c.params.delta_l},
          {"gamma_ca", c.params.gamma_ca},
          {"gamma_cb", c.params.gamma_cb}}},
        {"delta_p_grid", {{"start", c.delta_p_grid.start}, {"stop", c.delta_p_grid.stop}, {"points", c.delta_p_grid.points}}},
        {"delta_phi_grid",
         {{"start", c.delta_phi_grid.start}, {"stop", c.delta_phi_grid.stop}, {"points", c.delta_phi_grid.points}}},
        {"dynamics",
         {{"t_final", c.dynamics.t_final},
          {"dt", c.dynamics.dt},
          {"tol", c.dynamics.tol},
          {"window", to_string(c.dynamics.window)},
          {"initial_state", to_string(c.dynamics.initial_state)},
          {"subtract_steady", c.dynamics.subtract_steady},
          {"peak_threshold", c.dynamics.peak_threshold}}},
        {"output", c.output},
        {"format", to_string(c.format)},
    };
}

const std::vector<std::string_view>& preset_ids() {
    static const std::vector<std::string_view> ids{
        "fig3a", "fig3b", "fig3c", "fig3d", "fig3e", "fig3f", "fig4a", "fig4b",
        "fig4c", "fig4d", "fig4e", "fig5a", "fig5b", "fig5c", "fig5d",
    };
    return ids;
}

std::optional<RunConfig> expand_preset(std::string_view id) {
    constexpr double pi = std::numbers::pi;

    RunConfig c;
    c.output = std::string(id) + ".csv";
    c.params.gamma_ca = 1.0;
    c.params.gamma_cb = 1.0;
    c.params.omega_l = 10.0;

    auto weak_probe = [&](Mode mode, double dphi) {
        c.mode = mode;
        c.params.omega_p = 0.37;
        c.params.phi_p = dphi;
    };
    auto strong_probe = [&](Mode mode, double dphi) {
        c.mode = mode;
        c.params.omega_p = 4.5;
        c.params.phi_p = dphi;
    };
    auto time_domain = [&](double delta_p) {
        c.mode = Mode::spectrum;
        c.params.omega_p = 0.1;
        c.params.delta_p = delta_p;
    };

    if (id == "fig3a") weak_probe(Mode::sweep, 0.0);
    else if (id == "fig3b") weak_probe(Mode::sweep, pi / 2);
    else if (id == "fig3c") weak_probe(Mode::sweep, pi);
    else if (id == "fig3d") weak_probe(Mode::sweep, 3 * pi / 2);
    else if (id == "fig3e" || id == "fig3f") weak_probe(Mode::map, 0.0);
    else if (id == "fig4a") strong_probe(Mode::sweep, 0.0);
    else if (id == "fig4b") strong_probe(Mode::sweep, pi / 2);
    else if (id == "fig4c") strong_probe(Mode::sweep, pi);
    else if (id == "fig4d") strong_probe(Mode::sweep, -pi / 2);
    else if (id == "fig4e") strong_probe(Mode::map, 0.0);
    else if (id == "fig5a") time_domain(-20.0);
    else if (id == "fig5b") time_domain(-15.0);
    else if (id == "fig5c") time_domain(-10.0);
    else if (id == "fig5d") time_domain(0.0);
    else return std::nullopt;
    return c;
}

}  // namespace acsa
