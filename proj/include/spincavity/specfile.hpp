#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spincavity/geometry.hpp"
#include "spincavity/materials.hpp"

namespace spincavity {

// [solver] section: eigenmode search window and mode count.
struct SolverSection {
    double window_low_hz = 0.0;
    double window_high_hz = 0.0;
    int n_modes = 1;
    bool operator==(const SolverSection&) const = default;
};

// [ensemble] section: spin system hosted by one labeled region.
struct EnsembleSection {
    double rho = 0.0;               // m^-3
    double gamma_s_over_2pi_hz = 0.0; // half-linewidth / 2pi
    double g_factor = 2.0028;
    double d_over_h_hz = 2.877e9;
    std::string sample_label;       // region hosting the spins
    bool operator==(const EnsembleSection&) const = default;
};

// [coupling] section: which coupling pathway reports use.
struct CouplingSection {
    std::string pathway = "calibrated"; // "exact-si" | "calibrated"
    double alpha = 1.0;                 // external coupling ratio
    bool operator==(const CouplingSection&) const = default;
};

// Fully validated cavity description.  Lengths in metres, frequencies in Hz,
// densities in m^-3.  [mesh] and [solver] are required for the meshed
// variants (cylindrical, axisymmetric); [ensemble] and [coupling] are
// optional (mode-only runs).
struct CavitySpec {
    CavityGeometry geometry;
    std::optional<double> target_cell; // [mesh] target cell size, m
    std::optional<SolverSection> solver;
    std::optional<EnsembleSection> ensemble;
    CouplingSection coupling;

    bool operator==(const CavitySpec&) const = default;

    // Exact volume (m^3) of the ensemble's sample region; DomainError if no
    // ensemble or no matching region.
    double sample_region_volume() const;
};

// Parses and validates a cavity-spec file.  Every failure is a ParseError
// naming the offending key and line ("path:line: [section].key: ...").
// Unknown sections or keys are rejected.  Materials are resolved against
// the given library.
CavitySpec parse_spec(const std::string& path,
                      const MaterialLibrary& materials);

// Same parser over an in-memory document; origin appears in messages.
CavitySpec parse_spec_text(std::string_view text, std::string_view origin,
                           const MaterialLibrary& materials);

// Canonical text form; parse_spec_text(serialize_spec(s)) == s.
std::string serialize_spec(const CavitySpec& spec);

} // namespace spincavity
