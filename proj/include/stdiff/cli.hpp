#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "stdiff/catalog.hpp"

namespace stdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
    std::optional<std::filesystem::path> records_path;  // embedded reference table when absent
    std::optional<std::filesystem::path> constants_path;
    int k_per_category = 3;
    RankFilter filter = RankFilter::All;
    std::filesystem::path output_dir = ".";
};

// Each command returns 0 on success, 1 on validation diagnostics (written to
// `err`, one per line) and 2 on I/O failure. Output files are written to a
// temporary name and renamed into place, only after every input validated.

/// table.csv and bounds.txt
int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// figure.svg and figure.dat
int cmd_figure(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// bounds.txt only
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Parses the record file and reports diagnostics; writes nothing.
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Prints the terms, molar mass and nuclei per formula unit.
int cmd_formula(std::string_view text, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int run(int argc, char** argv);

}  // namespace stdiff::cli
