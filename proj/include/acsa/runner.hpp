#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "acsa/config.hpp"

namespace acsa {

struct RunOutcome {
    std::string summary;  // one line
    std::vector<std::filesystem::path> files;
};

/// Executes a validated configuration and writes its outputs.
///
/// CSV output writes the data file plus a sibling .meta.json holding the full
/// configuration and solver statistics; JSON output writes one document with
/// both. With an empty output path the data goes to `data_sink` and no
/// metadata is written.
RunOutcome execute(const RunConfig& config, std::ostream& data_sink, std::size_t workers = 0);

}  // namespace acsa
