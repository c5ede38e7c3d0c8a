#pragma once

#include "spincavity/geometry.hpp"

namespace spincavity {

// Lumped-element estimate of the fundamental reentrant-post mode:
//   C = eps0 pi r_post^2 / gap
//   L = (mu0 h / 2pi) ln(R / r_post)
//   f = 1 / (2pi sqrt(L C))
// Valid for gap << cavity_height; throws DomainError when the post fills the
// cavity (the inductance log degenerates) or dimensions are non-physical.
double reentrant_lumped_frequency(const ReentrantGeometry& g);

} // namespace spincavity
