#include "spincavity/reentrant.hpp"

#include <cmath>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

double reentrant_lumped_frequency(const ReentrantGeometry& g) {
    if (!(g.post_radius > 0.0 && g.cavity_radius > 0.0 &&
          g.cavity_height > 0.0 && g.gap > 0.0))
        throw DomainError("reentrant dimensions must be positive");
    if (!(g.post_radius < g.cavity_radius))
        throw DomainError("reentrant post must be narrower than the cavity");
    if (!(g.gap < g.cavity_height))
        throw DomainError("reentrant gap must be smaller than the cavity height");

    using namespace constants;
    const double cap = eps0 * pi * g.post_radius * g.post_radius / g.gap;
    const double ind =
        mu0 * g.cavity_height / two_pi * std::log(g.cavity_radius / g.post_radius);
    return 1.0 / (two_pi * std::sqrt(ind * cap));
}

} // namespace spincavity
