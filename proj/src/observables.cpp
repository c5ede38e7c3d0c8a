#include "spincavity/observables.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

double midpoint_e(const FieldSolution& f, std::size_t ci, std::size_t cj) {
    const AxiMesh& m = *f.mesh;
    return 0.25 * (f.e_phi[m.node_index(ci, cj)] +
                   f.e_phi[m.node_index(ci + 1, cj)] +
                   f.e_phi[m.node_index(ci, cj + 1)] +
                   f.e_phi[m.node_index(ci + 1, cj + 1)]);
}

int require_label(const AxiMesh& mesh, const std::string& label) {
    const int idx = mesh.label_index(label);
    if (idx < 0) {
        std::ostringstream os;
        os << "unknown region label '" << label << "'; mesh has:";
        for (const auto& l : mesh.labels)
            os << " '" << l << "'";
        throw DomainError(os.str());
    }
    return idx;
}

// Numerator over the labeled cells and denominator over all cells of a
// cell-midpoint energy quadrature.  kind selects the magnetic (|H|^2) or
// electric (eps_r |E|^2) density; the common physical prefactor cancels.
enum class EnergyKind { magnetic, electric };

double energy_fraction(const FieldSolution& field, int label_idx,
                       EnergyKind kind) {
    const AxiMesh& mesh = *field.mesh;
    long double inside = 0.0L, total = 0.0L;
    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
        for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
            const std::size_t c = mesh.cell_index(ci, cj);
            double density;
            if (kind == EnergyKind::magnetic) {
                density = field.h_r[c] * field.h_r[c] +
                          field.h_z[c] * field.h_z[c];
            } else {
                const double e = midpoint_e(field, ci, cj);
                density = mesh.materials[mesh.cell_label[c]].eps_r * e * e;
            }
            const double contribution = density * mesh.cell_volume(ci, cj);
            total += contribution;
            if (mesh.cell_label[c] == label_idx)
                inside += contribution;
        }
    }
    if (total <= 0.0L)
        throw DomainError("energy fraction of an identically zero field");
    return static_cast<double>(inside / total);
}

} // namespace

double magnetic_filling_factor(const FieldSolution& field,
                               const std::string& region_label) {
    return energy_fraction(field, require_label(*field.mesh, region_label),
                           EnergyKind::magnetic);
}

double electric_filling_factor(const FieldSolution& field,
                               const std::string& region_label) {
    return energy_fraction(field, require_label(*field.mesh, region_label),
                           EnergyKind::electric);
}

FillingFactors filling_factors(const FieldSolution& field) {
    FillingFactors out;
    for (const auto& label : field.mesh->labels) {
        out.p_m[label] = magnetic_filling_factor(field, label);
        out.p_e[label] = electric_filling_factor(field, label);
    }
    return out;
}

double geometric_factor(const FieldSolution& field) {
    const AxiMesh& mesh = *field.mesh;
    long double volume = 0.0L;
    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
        for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
            const std::size_t c = mesh.cell_index(ci, cj);
            volume += (field.h_r[c] * field.h_r[c] +
                       field.h_z[c] * field.h_z[c]) *
                      mesh.cell_volume(ci, cj);
        }
    }

    long double surface = 0.0L;
    const std::size_t last_r = mesh.nr_cells() - 1;
    const std::size_t last_z = mesh.nz_cells() - 1;
    const double wall_r = mesh.r_nodes.back();
    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
        const double hz = field.h_z[mesh.cell_index(last_r, cj)];
        const double dz = mesh.z_nodes[cj + 1] - mesh.z_nodes[cj];
        surface += hz * hz * constants::two_pi * wall_r * dz;
    }
    for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
        const double r0 = mesh.r_nodes[ci], r1 = mesh.r_nodes[ci + 1];
        const double ring = constants::pi * (r1 * r1 - r0 * r0);
        const double hr_bottom = field.h_r[mesh.cell_index(ci, 0)];
        const double hr_top = field.h_r[mesh.cell_index(ci, last_z)];
        surface += (hr_bottom * hr_bottom + hr_top * hr_top) * ring;
    }

    if (surface <= 0.0L)
        throw DomainError(
            "geometric factor: tangential wall field vanishes identically");
    return static_cast<double>(field.omega * constants::mu0 * volume / surface);
}

double q_metal(double gf_ohm, double r_surface_ohm) {
    if (!(gf_ohm > 0.0))
        throw DomainError("q_metal: geometric factor must be positive");
    if (r_surface_ohm < 0.0)
        throw DomainError("q_metal: surface resistance must be >= 0");
    if (r_surface_ohm == 0.0)
        return infinity;
    return gf_ohm / r_surface_ohm;
}

double q_dielectric(double p_e, double tan_delta) {
    if (!(p_e >= 0.0 && p_e <= 1.0))
        throw DomainError("q_dielectric: p_e must lie in [0,1]");
    if (tan_delta < 0.0)
        throw DomainError("q_dielectric: tan_delta must be >= 0");
    const double loss = p_e * tan_delta;
    if (loss == 0.0)
        return infinity;
    return 1.0 / loss;
}

double q_total(const std::vector<double>& q_parts) {
    if (q_parts.empty())
        throw DomainError("q_total: no loss channels given");
    double inv = 0.0;
    double smallest = infinity;
    for (double q : q_parts) {
        if (std::isinf(q) && q > 0.0)
            continue;
        if (!(q > 0.0))
            throw DomainError("q_total: loss channels must be positive");
        inv += 1.0 / q;
        smallest = std::min(smallest, q);
    }
    if (inv == 0.0)
        return infinity;
    // min() guards the q_total <= min(parts) ordering against the last ulp
    // of the double reciprocal round trip.
    return std::min(1.0 / inv, smallest);
}

double cavity_damping_rate(double frequency_hz, double q0) {
    if (!(frequency_hz > 0.0))
        throw DomainError("cavity_damping_rate: frequency must be positive");
    if (!(q0 > 0.0))
        throw DomainError("cavity_damping_rate: q0 must be positive");
    return constants::two_pi * frequency_hz / q0;
}

QBudget q_budget(const FieldSolution& field, const Material& wall) {
    if (wall.kind != MaterialKind::metal)
        throw DomainError("q_budget: wall material must be a metal");
    QBudget budget;
    budget.gf = geometric_factor(field);
    budget.q_met = q_metal(budget.gf, wall.r_surface);

    std::vector<double> parts{budget.q_met};
    for (const auto& label : field.mesh->labels) {
        const int idx = field.mesh->label_index(label);
        const double p_e = electric_filling_factor(field, label);
        const double q = q_dielectric(p_e, field.mesh->materials[idx].tan_delta);
        budget.q_diel[label] = q;
        parts.push_back(q);
    }
    budget.q0 = q_total(parts);
    budget.kappa_c =
        cavity_damping_rate(field.omega / constants::two_pi, budget.q0);
    return budget;
}

} // namespace spincavity
