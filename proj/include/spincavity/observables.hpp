#pragma once

#include <map>
#include <string>
#include <vector>

#include "spincavity/fields.hpp"
#include "spincavity/materials.hpp"

namespace spincavity {

// Energy-confinement fractions per labeled region.  Over any partition of
// the cavity volume each family sums to 1.
struct FillingFactors {
    std::map<std::string, double> p_m; // magnetic fraction by region label
    std::map<std::string, double> p_e; // electric fraction by region label
};

// Fraction of the stored magnetic energy inside the labeled region
// (mu_r = 1 everywhere, so the weight is |H|^2).  Unknown label -> DomainError.
double magnetic_filling_factor(const FieldSolution& field,
                               const std::string& region_label);

// Fraction of the stored electric energy (weight eps_r |E|^2) inside the
// labeled region.  Unknown label -> DomainError.
double electric_filling_factor(const FieldSolution& field,
                               const std::string& region_label);

// Both factor families for every label present in the mesh.
FillingFactors filling_factors(const FieldSolution& field);

// Geometric factor in ohms:
//   gf = omega * mu0 * (volume integral of |H|^2)
//                    / (boundary integral of |H_tan|^2)
// with the boundary integral taken by edge-midpoint quadrature over
// wall-adjacent cells (outer wall uses h_z, end caps use h_r).
// DomainError if the surface field vanishes identically.
double geometric_factor(const FieldSolution& field);

// Wall Q from the geometric factor: q = gf / r_surface.  A zero surface
// resistance returns +infinity; negative inputs or gf <= 0 -> DomainError.
double q_metal(double gf_ohm, double r_surface_ohm);

// Dielectric Q: 1 / (p_e * tan_delta); +infinity when either factor is 0.
// p_e outside [0,1] or tan_delta < 0 -> DomainError.
double q_dielectric(double p_e, double tan_delta);

// Harmonic combination of loss channels; +infinity entries drop out.
// Result never exceeds the smallest part.  Empty list or a non-positive
// finite part -> DomainError.
double q_total(const std::vector<double>& q_parts);

// Photon damping rate kappa_c = 2*pi*frequency / q0 (rad/s).
// Non-positive input -> DomainError.
double cavity_damping_rate(double frequency_hz, double q0);

// Full loss budget of a solved mode with a given wall material.
struct QBudget {
    double gf = 0.0;                      // ohm
    double q_met = 0.0;                   // wall contribution
    std::map<std::string, double> q_diel; // per-region dielectric contribution
    double q0 = 0.0;                      // combined unloaded Q
    double kappa_c = 0.0;                 // rad/s
};

// Assembles gf, per-channel Qs, the combined q0 (1/q0 = 1/q_met + sum 1/q_diel
// by construction) and kappa_c = omega / q0 for the field's own frequency.
QBudget q_budget(const FieldSolution& field, const Material& wall);

} // namespace spincavity
