#pragma once

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "spincavity/analytic_modes.hpp"
#include "spincavity/constants.hpp"
#include "spincavity/fields.hpp"
#include "spincavity/geometry.hpp"
#include "spincavity/materials.hpp"
#include "spincavity/mesh.hpp"

namespace testutil {

// Samples the lowest azimuthally symmetric TE mode of an empty cylinder
// (E_phi ~ J1(chi r/R) sin(pi z/H)) onto a mesh, with the magnetic field
// derived the same way the eigensolver derives it.  Useful for testing
// quadrature-based observables against closed forms.
inline spincavity::FieldSolution sampled_te011_field(
    std::shared_ptr<const spincavity::AxiMesh> mesh) {
    namespace sc = spincavity;
    namespace k = spincavity::constants;
    const double radius = mesh->outer_radius();
    const double height = mesh->height();
    const double chi = sc::bessel_j_prime_root(0, 1); // first root of J0'
    const double freq = sc::analytic_cylindrical_mode(
        radius, height, sc::CylindricalFamily::te, 0, 1, 1);
    const double omega = k::two_pi * freq;
    const double kr = chi / radius;
    const double kz = k::pi / height;

    sc::FieldSolution f;
    f.mesh = mesh;
    f.omega = omega;
    f.e_phi.resize(mesh->n_nodes(), 0.0);
    for (std::size_t j = 0; j < mesh->z_nodes.size(); ++j)
        for (std::size_t i = 0; i < mesh->r_nodes.size(); ++i)
            f.e_phi[mesh->node_index(i, j)] =
                std::cyl_bessel_j(1, kr * mesh->r_nodes[i]) *
                std::sin(kz * mesh->z_nodes[j]);
    f.h_r.resize(mesh->n_cells(), 0.0);
    f.h_z.resize(mesh->n_cells(), 0.0);
    const double scale = 1.0 / (omega * k::mu0);
    for (std::size_t cj = 0; cj < mesh->nz_cells(); ++cj)
        for (std::size_t ci = 0; ci < mesh->nr_cells(); ++ci) {
            const double rm = 0.5 * (mesh->r_nodes[ci] + mesh->r_nodes[ci + 1]);
            const double zm = 0.5 * (mesh->z_nodes[cj] + mesh->z_nodes[cj + 1]);
            const std::size_t c = mesh->cell_index(ci, cj);
            f.h_r[c] = -scale * kz * std::cyl_bessel_j(1, kr * rm) *
                       std::cos(kz * zm);
            f.h_z[c] = scale * kr * std::cyl_bessel_j(0, kr * rm) *
                       std::sin(kz * zm);
        }
    return f;
}

// Deterministic random loaded axisymmetric geometry: an enclosure with up to
// three non-overlapping dielectric annular blocks stacked in disjoint
// z-bands.
inline spincavity::AxisymmetricGeometry random_loaded_geometry(
    std::mt19937& rng) {
    namespace sc = spincavity;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double radius = 0.02 + 0.03 * u(rng);
    const double height = 0.025 + 0.04 * u(rng);
    const char* names[] = {"diamond", "sapphire", "rutile", "fused-silica"};
    sc::AxisymmetricGeometry g{radius, height, {}};
    const int n_regions = 1 + static_cast<int>(u(rng) * 3.0);
    for (int k = 0; k < n_regions; ++k) {
        const double band_lo = height * (k + 0.1) / 3.0;
        const double band_hi = height * (k + 0.9) / 3.0;
        const double z0 = band_lo + 0.3 * (band_hi - band_lo) * u(rng);
        const double z1 = z0 + 0.3 * (band_hi - band_lo) * (0.5 + 0.5 * u(rng));
        const double r0 = 0.4 * radius * u(rng);
        const double r1 = r0 + (0.15 + 0.4 * u(rng)) * (radius - r0);
        const char* name = names[static_cast<int>(u(rng) * 4.0) % 4];
        g.regions.push_back({std::string("load") + std::to_string(k),
                             sc::builtin_material(name), r0, r1, z0, z1});
    }
    return g;
}

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

} // namespace testutil
