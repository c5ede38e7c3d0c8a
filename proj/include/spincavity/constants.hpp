#pragma once

namespace spincavity::constants {

// CODATA 2018 values, 12 significant digits where the constant is measured,
// exact where the SI definition fixes it.
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double speed_of_light = 299792458.0;         // m/s, exact
inline constexpr double planck = 6.62607015e-34;              // J s, exact
inline constexpr double hbar = planck / two_pi;               // J s, derived
inline constexpr double mu0 = 1.25663706212e-6;               // H/m
inline constexpr double eps0 = 8.85418781280e-12;             // F/m
inline constexpr double bohr_magneton = 9.27401007830e-24;    // J/T

} // namespace spincavity::constants

namespace spincavity {

// Bundled snapshot of the constants above for callers that want to pass
// them around as a value.
struct PhysicalConstants {
    double c = constants::speed_of_light;
    double h = constants::planck;
    double hbar = constants::hbar;
    double mu0 = constants::mu0;
    double eps0 = constants::eps0;
    double mu_b = constants::bohr_magneton;
};

} // namespace spincavity
