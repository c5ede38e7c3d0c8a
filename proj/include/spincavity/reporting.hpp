#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spincavity/observables.hpp"
#include "spincavity/spectra.hpp"
#include "spincavity/spin.hpp"
#include "spincavity/table.hpp"

namespace spincavity {

// Tool version string baked in at build time.
const char* tool_version();

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value);

// Whole-file atomic write: temp file in the target directory, then rename.
// IoError (raised as spincavity::Error subclass) on failure.
void write_file_atomic(const std::string& path, const std::string& content);

// dispersion.csv: header b_tesla,delta_rad_s,omega_rad_s then one row per
// field point, newline-terminated.
std::string dispersion_csv(const DispersionTrace& trace);

// spectra.csv: header b_tesla,omega_rad_s,s11_sq then one row per
// (field, probe) pair, blocks ordered by field point.
std::string spectra_csv(const std::vector<double>& b_field,
                        const std::vector<SpectrumTrace>& spectra);

// run_manifest.txt: "key = value" lines, tool version first.
std::string run_manifest(
    const std::vector<std::pair<std::string, std::string>>& entries);

// Human-readable renderings used by the CLI.
std::string render_coupling_report(const CouplingReport& report);
std::string render_comparison_report(const ComparisonReport& report);

// Machine-readable (CSV) renderings.
std::string coupling_report_csv(const CouplingReport& report);
std::string comparison_report_csv(const ComparisonReport& report);

} // namespace spincavity
