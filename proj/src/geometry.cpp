#include "spincavity/geometry.hpp"

#include <sstream>

#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << what << " must be positive, got " << v;
        throw GeometryError(os.str());
    }
}

bool overlaps(const Region& a, const Region& b) {
    const bool r = a.r_min < b.r_max && b.r_min < a.r_max;
    const bool z = a.z_min < b.z_max && b.z_min < a.z_max;
    return r && z;
}

void validate_regions(const AxisymmetricGeometry& g) {
    for (const auto& reg : g.regions) {
        if (reg.label.empty())
            throw GeometryError("region label must not be empty");
        if (reg.label == "vacuum" && reg.material.name != "vacuum")
            throw GeometryError(
                "label 'vacuum' is reserved for the uncovered background");
        reg.material.validate();
        if (reg.material.kind != MaterialKind::dielectric)
            throw GeometryError("region '" + reg.label +
                                "' must use a dielectric material");
        if (!(reg.r_min >= 0.0) || !(reg.r_max > reg.r_min) ||
            !(reg.z_max > reg.z_min))
            throw GeometryError("region '" + reg.label +
                                "' has degenerate or inverted bounds");
        if (reg.r_max > g.outer_radius || reg.z_min < 0.0 ||
            reg.z_max > g.height)
            throw GeometryError("region '" + reg.label +
                                "' extends outside the enclosure");
    }
    for (std::size_t i = 0; i < g.regions.size(); ++i) {
        for (std::size_t j = i + 1; j < g.regions.size(); ++j) {
            const auto& a = g.regions[i];
            const auto& b = g.regions[j];
            if (overlaps(a, b))
                throw GeometryError("regions '" + a.label + "' and '" +
                                    b.label + "' overlap");
            if (a.label == b.label && !(a.material == b.material))
                throw GeometryError("regions sharing label '" + a.label +
                                    "' must share one material");
        }
    }
}

} // namespace

void CavityGeometry::validate() const {
    wall.validate();
    if (wall.kind != MaterialKind::metal)
        throw GeometryError("cavity wall material must be a metal");

    if (const auto* r = std::get_if<RectangularGeometry>(&shape)) {
        require_positive(r->a, "rectangular a");
        require_positive(r->b, "rectangular b");
        require_positive(r->d, "rectangular d");
    } else if (const auto* c = std::get_if<CylindricalGeometry>(&shape)) {
        require_positive(c->radius, "cylinder radius");
        require_positive(c->height, "cylinder height");
    } else if (const auto* a = std::get_if<AxisymmetricGeometry>(&shape)) {
        require_positive(a->outer_radius, "outer radius");
        require_positive(a->height, "height");
        validate_regions(*a);
    } else if (const auto* re = std::get_if<ReentrantGeometry>(&shape)) {
        require_positive(re->cavity_radius, "cavity radius");
        require_positive(re->cavity_height, "cavity height");
        require_positive(re->post_radius, "post radius");
        require_positive(re->gap, "gap");
        if (!(re->post_radius < re->cavity_radius))
            throw GeometryError("post radius must be smaller than cavity radius");
        if (!(re->gap < re->cavity_height))
            throw GeometryError("gap must be smaller than cavity height");
    }
}

const char* variant_name(const CavityGeometry& g) {
    switch (g.shape.index()) {
    case 0: return "rectangular";
    case 1: return "cylindrical";
    case 2: return "axisymmetric";
    default: return "reentrant";
    }
}

} // namespace spincavity
