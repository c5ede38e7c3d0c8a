#include "spincavity/fields.hpp"

#include <cmath>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

double midpoint_e(const FieldSolution& f, std::size_t ci, std::size_t cj) {
    const AxiMesh& m = *f.mesh;
    return 0.25 * (f.e_phi[m.node_index(ci, cj)] +
                   f.e_phi[m.node_index(ci + 1, cj)] +
                   f.e_phi[m.node_index(ci, cj + 1)] +
                   f.e_phi[m.node_index(ci + 1, cj + 1)]);
}

} // namespace

std::pair<double, double> mode_energies(const FieldSolution& field) {
    const AxiMesh& mesh = *field.mesh;
    long double we = 0.0L, wm = 0.0L;
    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
        for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
            const std::size_t c = mesh.cell_index(ci, cj);
            const double vol = mesh.cell_volume(ci, cj);
            const double e = midpoint_e(field, ci, cj);
            const double eps = mesh.materials[mesh.cell_label[c]].eps_r;
            we += 0.5L * constants::eps0 * eps * e * e * vol;
            wm += 0.5L * constants::mu0 *
                  (field.h_r[c] * field.h_r[c] + field.h_z[c] * field.h_z[c]) *
                  vol;
        }
    }
    return {static_cast<double>(we), static_cast<double>(wm)};
}

double mode_volume(const FieldSolution& field) {
    const AxiMesh& mesh = *field.mesh;
    long double integral = 0.0L;
    double peak = 0.0;
    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
        for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
            const std::size_t c = mesh.cell_index(ci, cj);
            const double e = midpoint_e(field, ci, cj);
            const double eps = mesh.materials[mesh.cell_label[c]].eps_r;
            const double density = eps * e * e;
            integral += static_cast<long double>(density) *
                        mesh.cell_volume(ci, cj);
            peak = std::max(peak, density);
        }
    }
    if (peak <= 0.0)
        throw DomainError("mode_volume: field is identically zero");
    return static_cast<double>(integral) / peak;
}

} // namespace spincavity
