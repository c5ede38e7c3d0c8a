#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spincavity/materials.hpp"

namespace spincavity {

// Rectangular box cavity, interior dimensions in metres.
struct RectangularGeometry {
    double a = 0, b = 0, d = 0;
    bool operator==(const RectangularGeometry&) const = default;
};

// Plain circular cylinder.
struct CylindricalGeometry {
    double radius = 0, height = 0;
    bool operator==(const CylindricalGeometry&) const = default;
};

// Axisymmetric annular block of material inside a cylindrical enclosure,
// r_min <= r <= r_max, z_min <= z <= z_max.
struct Region {
    std::string label;
    Material material;
    double r_min = 0, r_max = 0, z_min = 0, z_max = 0;
    bool operator==(const Region&) const = default;
};

// Cylindrical enclosure with axisymmetric dielectric inserts.
struct AxisymmetricGeometry {
    double outer_radius = 0, height = 0;
    std::vector<Region> regions;
    bool operator==(const AxisymmetricGeometry&) const = default;
};

// Reentrant (post) cavity described by its lumped-element dimensions.
struct ReentrantGeometry {
    double cavity_radius = 0, cavity_height = 0;
    double post_radius = 0, gap = 0;
    bool operator==(const ReentrantGeometry&) const = default;
};

struct CavityGeometry {
    std::variant<RectangularGeometry, CylindricalGeometry,
                 AxisymmetricGeometry, ReentrantGeometry>
        shape;
    Material wall; // must be a metal

    // Throws GeometryError on non-positive dimensions, regions leaving the
    // enclosure, overlapping regions, label/material mismatches, reentrant
    // post/gap violations, or a non-metal wall.
    void validate() const;

    bool operator==(const CavityGeometry&) const = default;
};

const char* variant_name(const CavityGeometry& g);

} // namespace spincavity
