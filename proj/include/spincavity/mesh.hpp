#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "spincavity/geometry.hpp"

namespace spincavity {

// Tensor-product mesh of an axisymmetric cavity cross-section.  Nodes live on
// the lines r_nodes x z_nodes; cell (i,j) spans [r_nodes[i], r_nodes[i+1]] x
// [z_nodes[j], z_nodes[j+1]] and carries one material and one region label.
// Label index 0 is always "vacuum" (cells not covered by any region).
struct AxiMesh {
    std::vector<double> r_nodes;
    std::vector<double> z_nodes;

    std::vector<std::string> labels;     // labels[0] == "vacuum"
    std::vector<Material> materials;     // parallel to labels
    std::vector<int> cell_label;         // per cell, index into labels

    std::size_t nr_cells() const { return r_nodes.size() - 1; }
    std::size_t nz_cells() const { return z_nodes.size() - 1; }
    std::size_t n_cells() const { return nr_cells() * nz_cells(); }
    std::size_t n_nodes() const { return r_nodes.size() * z_nodes.size(); }

    std::size_t cell_index(std::size_t ci, std::size_t cj) const {
        return ci + nr_cells() * cj;
    }
    std::size_t node_index(std::size_t i, std::size_t j) const {
        return i + r_nodes.size() * j;
    }

    // Exact annular volume of cell (ci, cj): pi (r_{i+1}^2 - r_i^2) dz.
    double cell_volume(std::size_t ci, std::size_t cj) const;
    const Material& cell_material(std::size_t ci, std::size_t cj) const {
        return materials[cell_label[cell_index(ci, cj)]];
    }

    double outer_radius() const { return r_nodes.back(); }
    double height() const { return z_nodes.back(); }

    int label_index(std::string_view label) const; // -1 if absent

    bool operator==(const AxiMesh&) const = default;
};

// Builds the snapped tensor mesh: every region boundary coincides with a mesh
// line, each axis interval between snap lines is subdivided uniformly into
// ceil(length / target_cell) cells.  Deterministic.  Throws RefinementError
// (naming the region) if target_cell exceeds a region's thickness, and
// GeometryError for invalid geometry.
AxiMesh build_mesh(const AxisymmetricGeometry& geometry, double target_cell);

// Volumes of all cells in cell-index order; sums to the cylinder volume.
std::vector<double> cell_volumes(const AxiMesh& mesh);

} // namespace spincavity
