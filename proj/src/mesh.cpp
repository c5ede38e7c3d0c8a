#include "spincavity/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

double AxiMesh::cell_volume(std::size_t ci, std::size_t cj) const {
    const double r0 = r_nodes[ci], r1 = r_nodes[ci + 1];
    const double dz = z_nodes[cj + 1] - z_nodes[cj];
    return constants::pi * (r1 * r1 - r0 * r0) * dz;
}

int AxiMesh::label_index(std::string_view label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == label)
            return static_cast<int>(k);
    return -1;
}

namespace {

// Snap lines sorted and merged; coordinates closer than eps collapse to one.
std::vector<double> merge_breakpoints(std::vector<double> pts, double eps) {
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (double p : pts) {
        if (out.empty() || p - out.back() > eps)
            out.push_back(p);
    }
    return out;
}

// Uniform subdivision of each interval between snap lines into
// ceil(length / target) cells; interval endpoints are reproduced exactly.
std::vector<double> subdivide(const std::vector<double>& breaks, double target) {
    std::vector<double> nodes;
    nodes.push_back(breaks.front());
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double lo = breaks[k], hi = breaks[k + 1];
        const double len = hi - lo;
        const auto n = static_cast<std::size_t>(std::ceil(len / target - 1e-9));
        const auto cells = std::max<std::size_t>(n, 1);
        for (std::size_t c = 1; c < cells; ++c)
            nodes.push_back(lo + len * static_cast<double>(c) /
                                     static_cast<double>(cells));
        nodes.push_back(hi);
    }
    return nodes;
}

} // namespace

AxiMesh build_mesh(const AxisymmetricGeometry& geometry, double target_cell) {
    CavityGeometry check;
    check.shape = geometry;
    check.wall = Material::make_metal("wall", 1.0); // placeholder for validate()
    check.validate();
    if (!(target_cell > 0.0))
        throw RefinementError("target_cell must be positive");

    for (const auto& reg : geometry.regions) {
        const double thickness =
            std::min(reg.r_max - reg.r_min, reg.z_max - reg.z_min);
        if (target_cell > thickness) {
            std::ostringstream os;
            os << "target_cell " << target_cell << " exceeds thickness "
               << thickness << " of region '" << reg.label << "'";
            throw RefinementError(os.str());
        }
    }

    const double eps_r = 1e-12 * geometry.outer_radius;
    const double eps_z = 1e-12 * geometry.height;

    std::vector<double> r_breaks{0.0, geometry.outer_radius};
    std::vector<double> z_breaks{0.0, geometry.height};
    for (const auto& reg : geometry.regions) {
        r_breaks.push_back(reg.r_min);
        r_breaks.push_back(reg.r_max);
        z_breaks.push_back(reg.z_min);
        z_breaks.push_back(reg.z_max);
    }

    AxiMesh mesh;
    mesh.r_nodes = subdivide(merge_breakpoints(std::move(r_breaks), eps_r),
                             target_cell);
    mesh.z_nodes = subdivide(merge_breakpoints(std::move(z_breaks), eps_z),
                             target_cell);

    mesh.labels.push_back("vacuum");
    mesh.materials.push_back(
        Material::make_dielectric("vacuum", 1.0, 0.0, "exact"));
    mesh.cell_label.assign(mesh.n_cells(), 0);

    for (const auto& reg : geometry.regions) {
        int label_idx = mesh.label_index(reg.label);
        if (label_idx < 0) {
            label_idx = static_cast<int>(mesh.labels.size());
            mesh.labels.push_back(reg.label);
            mesh.materials.push_back(reg.material);
        }
        for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
            const double zc = 0.5 * (mesh.z_nodes[cj] + mesh.z_nodes[cj + 1]);
            if (zc < reg.z_min || zc > reg.z_max)
                continue;
            for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
                const double rc =
                    0.5 * (mesh.r_nodes[ci] + mesh.r_nodes[ci + 1]);
                if (rc < reg.r_min || rc > reg.r_max)
                    continue;
                auto& slot = mesh.cell_label[mesh.cell_index(ci, cj)];
                if (slot != 0 && slot != label_idx)
                    throw GeometryError("cell claimed by two regions near r=" +
                                        std::to_string(rc) +
                                        " z=" + std::to_string(zc));
                slot = label_idx;
            }
        }
    }
    return mesh;
}

std::vector<double> cell_volumes(const AxiMesh& mesh) {
    std::vector<double> out(mesh.n_cells());
    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj)
        for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci)
            out[mesh.cell_index(ci, cj)] = mesh.cell_volume(ci, cj);
    return out;
}

} // namespace spincavity
