#pragma once

#include <memory>
#include <vector>

#include "spincavity/fields.hpp"
#include "spincavity/mesh.hpp"

namespace spincavity {

struct FrequencyWindow {
    double low_hz = 0.0;
    double high_hz = 0.0;
    bool contains(double f) const { return f >= low_hz && f <= high_hz; }
};

struct SolverOptions {
    double residual_tol = 1e-10; // relative pencil residual per eigenpair
    int extra_pairs = 4;         // converged pairs beyond n_modes near target
    int max_subspace = 400;      // hard cap on the Krylov dimension
};

// Solves the azimuthally symmetric TE0 eigenproblem
//   d2u/dz2 + d/dr[(1/r) d(r u)/dr] + (omega^2/c^2) eps_r(r,z) u = 0,
// u = E_phi, u = 0 on all walls and on the axis, on the given mesh.
//
// Discretization: per-cell midpoint differences of u in conservative form
// (flux of r*u for the radial term) assembled variationally, so the discrete
// magnetic and electric energies computed by mode_energies satisfy exact
// equipartition for every eigenpair.  The generalized symmetric pencil
// A u = (omega/c)^2 B u is solved by shift-invert Lanczos (B-inner product,
// full reorthogonalization, deterministic start vector) with the shift at
// the window centre.
//
// Returns up to n_modes modes with frequencies inside the window, sorted
// ascending; fields are normalized to 1 J total stored energy.  An empty
// window is not an error.  Throws SolverError if the iteration cannot
// converge the requested neighbourhood of the target.
std::vector<ModeResult> solve_axisymmetric_te0(
    std::shared_ptr<const AxiMesh> mesh, FrequencyWindow window, int n_modes,
    const SolverOptions& options = {});

} // namespace spincavity
