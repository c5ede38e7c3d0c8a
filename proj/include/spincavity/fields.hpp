#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spincavity/mesh.hpp"

namespace spincavity {

// Discrete TE0 eigenfield on an AxiMesh.  The azimuthal electric field is
// stored on nodes (boundary nodes are exactly zero); the magnetic field is
// stored at cell midpoints.  Phase convention: e_phi holds the real field
// amplitude and h_r/h_z hold the amplitude of the physically 90-degree
// shifted magnetic field, so energy densities are eps |e|^2 and mu0 |h|^2
// with the stored real numbers.
struct FieldSolution {
    std::shared_ptr<const AxiMesh> mesh;
    std::vector<double> e_phi; // node values, V/m
    std::vector<double> h_r;   // cell values, A/m
    std::vector<double> h_z;   // cell values, A/m
    double omega = 0.0;        // angular frequency, rad/s
};

// One resonant mode.  Lumped-model and closed-form results carry no field;
// their energies and mode volume stay unset.
struct ModeResult {
    std::string mode_id;
    double frequency = 0.0; // Hz
    double omega = 0.0;     // rad/s, always 2*pi*frequency
    std::optional<FieldSolution> field;
    double w_e = 0.0; // stored electric energy, J
    double w_m = 0.0; // stored magnetic energy, J
    std::optional<double> mode_volume_m3;
};

// Stored electric and magnetic energy (w_e, w_m) of a field by cell-midpoint
// quadrature with the exact annular cell volumes.  The electric field is
// interpolated to each cell midpoint as the mean of its four corner nodes.
std::pair<double, double> mode_energies(const FieldSolution& field);

// Peak-normalized mode volume: integral of eps_r |E|^2 over the cavity
// divided by the maximum cell-midpoint eps_r |E|^2.  DomainError on an
// identically zero field.
double mode_volume(const FieldSolution& field);

} // namespace spincavity
