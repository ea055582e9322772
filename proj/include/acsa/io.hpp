#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "acsa/analytic.hpp"
#include "acsa/dynamics.hpp"
#include "acsa/scan.hpp"

namespace acsa {

/// Shortest-form-independent rendering with 17 significant digits, so every
/// double round-trips exactly.
std::string format_double(double value);

void write_csv(const ScanTable& table, std::ostream& out);
void write_csv(const Spectrum& spectrum, std::ostream& out);
void write_csv(const analytic::DressedPair& pair, std::ostream& out);

nlohmann::json to_json(const ScanTable& table);
nlohmann::json to_json(const Spectrum& spectrum);
nlohmann::json to_json(const analytic::DressedPair& pair);
nlohmann::json to_json(const Peak& peak);

/// max/mean residual and failed-point count of a table.
nlohmann::json residual_stats(const ScanTable& table);

/// Sibling metadata path: results.csv -> results.meta.json.
std::filesystem::path metadata_path(const std::filesystem::path& data_path);

/// Writes `contents` to path; throws IoError.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace acsa
