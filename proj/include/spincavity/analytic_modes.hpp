#pragma once

namespace spincavity {

enum class CylindricalFamily { te, tm };

// Resonant frequency (Hz) of mode (m, n, p) of an ideal rectangular cavity
// with interior dimensions a x b x d:
//   f = (c/2) sqrt((m/a)^2 + (n/b)^2 + (p/d)^2)
// Indices must be non-negative with at most one of them zero.
double analytic_rectangular_mode(double a, double b, double d, int m, int n,
                                 int p);

// Resonant frequency (Hz) of mode (m, n, p) of an ideal circular cylinder:
//   f = (c/2pi) sqrt((chi/R)^2 + (p pi / H)^2)
// where chi is the n-th root of J_m' (TE) or of J_m (TM).  Supported index
// range: 0 <= m <= 5, 1 <= n <= 5; p >= 1 for TE, p >= 0 for TM.
double analytic_cylindrical_mode(double radius, double height,
                                 CylindricalFamily family, int m, int n, int p);

// n-th positive root of J_m (1-based n), same index range as above.
double bessel_j_root(int m, int n);
// n-th positive root of J_m' (1-based n).
double bessel_j_prime_root(int m, int n);

} // namespace spincavity
