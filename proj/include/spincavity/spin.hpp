#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "spincavity/constants.hpp"

namespace spincavity {

// Paramagnetic two-level ensemble hosted in the cavity.  gamma_s is the
// angular HALF-width of the spin line (rad/s); quoted FWHM linewidths
// convert via half_linewidth_from_fwhm and dephasing times via
// half_linewidth_from_t2_star (gamma_s = 2 / T2*).
struct SpinEnsemble {
    double rho = 0.0;           // spin number density, m^-3
    double gamma_s = 0.0;       // angular half-linewidth, rad/s
    double g_factor = 2.0028;   // Lande factor
    double d_over_h = 2.877e9;  // zero-field splitting, Hz
    double sample_volume = 0.0; // m^3
    std::optional<double> t2_star; // s; when set, gamma_s == 2 / t2_star

    // m0 = g_factor * mu_B, derived on demand (J/T).
    double magnetic_moment() const {
        return g_factor * constants::bohr_magneton;
    }

    // DomainError unless rho > 0, gamma_s > 0 and, if t2_star is set,
    // gamma_s matches 2 / t2_star to 1e-9 relative.
    void validate() const;
};

// gamma_s (rad/s, half-width) from a full width at half maximum in Hz.
double half_linewidth_from_fwhm(double fwhm_hz);

// gamma_s (rad/s, half-width) from a dephasing time in seconds.
double half_linewidth_from_t2_star(double t2_star_s);

enum class Regime { weak, high_cooperativity, strong };
std::string regime_name(Regime regime);

// Collective coupling rate (rad/s):
//   g_c = (m0 / 2) * sqrt(rho * mu0 * omega_c * p_m / hbar).
// p_m outside [0,1] or omega_c <= 0 -> DomainError.
double collective_coupling(const SpinEnsemble& ensemble, double p_m,
                           double omega_c);

// Coupling in MHz from the dataset-calibrated square-root law
// g_c = k_g * sqrt(p_m).  k_g <= 0 -> DomainError.
double calibrated_coupling(double p_m, double k_g_mhz);

// N = rho * sample_volume.
double spin_count(const SpinEnsemble& ensemble);

// g_s = g_c / sqrt(n); n < 1 -> DomainError.
double single_spin_coupling(double g_c, double n_spins);

// C = g_c^2 / (2 * kappa_c * gamma_s); all rates angular (rad/s).
// Non-positive kappa_c or gamma_s -> DomainError.
double cooperativity(double g_c, double kappa_c, double gamma_s);

// C from the dataset-calibrated law C = k_c * g_c^2 * q0, g_c in MHz.
// k_c <= 0 -> DomainError.
double calibrated_cooperativity(double g_c_mhz, double q0, double k_c_per_mhz2);

// strong  : g_c > gamma_s and g_c > kappa_c (strict)
// high-cooperativity : C > 1 and not strong
// weak    : otherwise.  Equalities fall to the weaker class.
Regime regime_classify(double g_c, double kappa_c, double gamma_s);

// Angles (degrees, in [0,180], unfolded) between b_direction and the four
// <111> unit axes {(1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1)}/sqrt(3), in that
// fixed order.  |b_direction| must be 1 within 1e-9, else DomainError.
std::array<double, 4> nv_orientation_angles(
    const std::array<double, 3>& b_direction);

// First-order secular transition pair (f_minus, f_plus) in Hz:
//   f_pm = d_over_h +- (g_factor * mu_B / h) * B * cos(angle).
std::pair<double, double> nv_transition_frequencies(
    const SpinEnsemble& ensemble, double b_magnitude_t, double angle_deg);

// Figures of merit bundled for reporting.  pathway records whether g_c came
// from the closed-form SI evaluation ("exact-si") or from the calibrated
// square-root law ("calibrated"); the two may differ by orders of magnitude
// and must never be mixed silently.
struct CouplingReport {
    std::string pathway;
    double g_c = 0.0;          // rad/s
    double g_c_mhz = 0.0;      // g_c / 2pi in MHz
    double g_s = 0.0;          // rad/s (0 when n_spins < 1)
    double n_spins = 0.0;
    double cooperativity = 0.0;
    Regime regime = Regime::weak;
    // inputs echo
    double p_m = 0.0;
    double q0 = 0.0;
    double nu_c = 0.0;    // Hz
    double kappa_c = 0.0; // rad/s
    double gamma_s = 0.0; // rad/s
    std::string ensemble_summary;
};

// Exact-SI report: Eq.-of-motion rates from first principles.
CouplingReport coupling_report_exact(const SpinEnsemble& ensemble, double p_m,
                                     double nu_c_hz, double q0);

// Calibrated report: g_c from k_g*sqrt(p_m) (MHz), C from k_c*g_c^2*q0.
// The ensemble supplies gamma_s, N and the summary line.
CouplingReport coupling_report_calibrated(const SpinEnsemble& ensemble,
                                          double p_m, double nu_c_hz,
                                          double q0, double k_g_mhz,
                                          double k_c_per_mhz2);

} // namespace spincavity
