#include "acsa/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "acsa/error.hpp"

namespace acsa {
namespace {

void put(std::ostream& out, double v) { out << format_double(v); }

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

void write_csv(const ScanTable& table, std::ostream& out) {
    out << "delta_p,";
    if (table.is_map()) out << "delta_phi,";
    out << "re_rho_ab,im_rho_ab,re_rho_ac,im_rho_ac,rho_aa,rho_bb,rho_cc,residual,status\r\n";
    for (const auto& r : table.records) {
        put(out, r.delta_p);
        out << ',';
        if (table.is_map()) {
            put(out, r.delta_phi);
            out << ',';
        }
        for (double v : {r.rho_ab.real(), r.rho_ab.imag(), r.rho_ac.real(), r.rho_ac.imag(), r.pop_a, r.pop_b,
                         r.pop_c, r.residual}) {
            put(out, v);
            out << ',';
        }
        out << (r.ok() ? std::string_view("ok") : to_string(*r.error)) << "\r\n";
    }
}

void write_csv(const Spectrum& s, std::ostream& out) {
    out << "nu,amplitude,re_transform,im_transform\r\n";
    for (std::size_t k = 0; k < s.nu.size(); ++k) {
        put(out, s.nu[k]);
        out << ',';
        put(out, s.amplitude[k]);
        out << ',';
        put(out, s.transform[k].real());
        out << ',';
        put(out, s.transform[k].imag());
        out << "\r\n";
    }
}

void write_csv(const analytic::DressedPair& pair, std::ostream& out) {
    out << "level,re_plus,im_plus,re_minus,im_minus\r\n";
    for (auto [name, level] : {std::pair{"c", Level::c}, std::pair{"b", Level::b}, std::pair{"a", Level::a}}) {
        const int i = index(level);
        out << name << ',';
        put(out, pair.plus(i).real());
        out << ',';
        put(out, pair.plus(i).imag());
        out << ',';
        put(out, pair.minus(i).real());
        out << ',';
        put(out, pair.minus(i).imag());
        out << "\r\n";
    }
}

nlohmann::json to_json(const ScanTable& table) {
    nlohmann::json cols;
    std::vector<nlohmann::json> dp, dphi, re_ab, im_ab, re_ac, im_ac, aa, bb, cc, res;
    std::vector<std::string> status;
    for (const auto& r : table.records) {
        dp.push_back(r.delta_p);
        dphi.push_back(r.delta_phi);
        re_ab.push_back(number_or_null(r.rho_ab.real()));
        im_ab.push_back(number_or_null(r.rho_ab.imag()));
        re_ac.push_back(number_or_null(r.rho_ac.real()));
        im_ac.push_back(number_or_null(r.rho_ac.imag()));
        aa.push_back(number_or_null(r.pop_a));
        bb.push_back(number_or_null(r.pop_b));
        cc.push_back(number_or_null(r.pop_c));
        res.push_back(number_or_null(r.residual));
        status.emplace_back(r.ok() ? "ok" : std::string(to_string(*r.error)));
    }
    cols["delta_p"] = dp;
    if (table.is_map()) cols["delta_phi"] = dphi;
    cols["re_rho_ab"] = re_ab;
    cols["im_rho_ab"] = im_ab;
    cols["re_rho_ac"] = re_ac;
    cols["im_rho_ac"] = im_ac;
    cols["rho_aa"] = aa;
    cols["rho_bb"] = bb;
    cols["rho_cc"] = cc;
    cols["residual"] = res;
    cols["status"] = status;
    return cols;
}

nlohmann::json to_json(const Spectrum& s) {
    std::vector<double> re, im;
    for (const auto& x : s.transform) {
        re.push_back(x.real());
        im.push_back(x.imag());
    }
    return {
        {"nu", s.nu},
        {"amplitude", s.amplitude},
        {"re_transform", re},
        {"im_transform", im},
        {"resolution", s.resolution},
        {"carrier", s.carrier},
        {"window", to_string(s.window)},
        {"steady_subtracted", s.steady_subtracted},
        {"frequency_convention", "X(nu) = sum_k x_k exp(+i (nu - carrier) t_k); carrier = delta_p - delta_l"},
    };
}

nlohmann::json to_json(const analytic::DressedPair& pair) {
    auto vec = [](const Vector3& v) {
        nlohmann::json out = nlohmann::json::object();
        for (auto [name, level] : {std::pair{"c", Level::c}, std::pair{"b", Level::b}, std::pair{"a", Level::a}})
            out[name] = {v(index(level)).real(), v(index(level)).imag()};
        return out;
    };
    return {{"r", pair.r}, {"plus", vec(pair.plus)}, {"minus", vec(pair.minus)}};
}

nlohmann::json to_json(const Peak& p) {
    return {{"nu_center", p.nu_center}, {"height", p.height}, {"fwhm", p.fwhm}, {"prominence", p.prominence}};
}

nlohmann::json residual_stats(const ScanTable& table) {
    double max_res = 0.0, sum = 0.0;
    std::size_t ok = 0;
    for (const auto& r : table.records) {
        if (!r.ok()) continue;
        max_res = std::max(max_res, r.residual);
        sum += r.residual;
        ++ok;
    }
    return {
        {"points", table.records.size()},
        {"failed", table.records.size() - ok},
        {"max_residual", max_res},
        {"mean_residual", ok > 0 ? sum / static_cast<double>(ok) : 0.0},
    };
}

std::filesystem::path metadata_path(const std::filesystem::path& data_path) {
    auto p = data_path;
    p.replace_extension(".meta.json");
    return p;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace acsa
