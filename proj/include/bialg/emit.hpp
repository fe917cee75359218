#pragma once

// Report output. JSON field order is fixed and rationals are strings, so
// identical runs give byte-identical output.

#include "bialg/report.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace bialg::io {

inline constexpr const char* kToolVersion = "1.0.0";

struct InputRecord {
    std::string path;    // as shown in the report
    std::string sha256;  // lowercase hex
};

// A structure produced by the command, as the canonical JSON of its file type.
struct Artifact {
    std::string name;
    std::string json;
};

struct Run {
    std::vector<std::string> command;  // argv with argv[0] replaced by the tool name
    Report report;
    std::string status;  // "pass" or "fail"; empty means report.pass()
    std::vector<InputRecord> inputs;
    std::vector<Artifact> artifacts;

    bool pass() const { return status.empty() ? report.pass() : status == "pass"; }
};

std::string sha256_hex(const std::string& bytes);
InputRecord record_input(const std::filesystem::path& p, const std::string& shown);

std::string emit_json(const Run& run);
std::string emit_text(const Run& run, bool color);
// colour only on a terminal with NO_COLOR unset
bool want_color();

}  // namespace bialg::io
