#pragma once

#include <vector>

namespace spincavity {

// Inputs of the one-port reflection model
//   S11(w) = 1 + kappa_e / ( i(w - omega_c) - kappa + g_c^2 / (i d(w) - gamma) )
// with kappa_e = alpha * kappa and d(w) = (w - omega_c) + delta the probe
// detuning from the spin line (the spin sits at omega_c - delta, so delta > 0
// means the spins resonate below the cavity).  All rates angular (rad/s).
struct SpectroscopyParams {
    double omega_c = 0.0; // cavity angular frequency
    double kappa = 0.0;   // total cavity damping
    double alpha = 1.0;   // external coupling ratio, kappa_e = alpha*kappa
    double g_c = 0.0;     // collective coupling
    double gamma = 0.0;   // spin half-linewidth
    double delta = 0.0;   // spin-cavity detuning

    // DomainError unless kappa > 0, gamma > 0, alpha >= 0, omega_c > 0.
    void validate() const;
};

struct SpectrumTrace {
    std::vector<double> freq;   // probe angular frequencies, rad/s
    std::vector<double> s11_sq; // |S11|^2, dimensionless
    SpectroscopyParams params;
};

struct DispersionTrace {
    std::vector<double> b_field;      // T
    std::vector<double> dressed_freq; // rad/s
    std::vector<double> delta;        // rad/s
};

struct SpectralPeak {
    double frequency = 0.0; // rad/s, interpolated dip position
    double depth = 0.0;     // 1 - min(|S11|^2), in [0,1] for passive params
    double fwhm = 0.0;      // rad/s, 0 when the half-depth level is not bracketed
};

// Pointwise |S11|^2 on the given grid of probe angular frequencies.
// Empty grid -> DomainError.
SpectrumTrace reflection_spectrum(const SpectroscopyParams& params,
                                  const std::vector<double>& freq_grid);

// delta = m0 * (b - b_r) / hbar (rad/s).
double detuning_from_field(double b_t, double b_r_t, double m0_j_per_t);

// Dispersive pull of the dressed cavity line:
//   omega = omega_c + g_c^2 * delta / (delta^2 + gamma^2).
// gamma <= 0 -> DomainError.
double dressed_mode_frequency(double omega_c, double g_c, double delta,
                              double gamma);

struct FieldSweepResult {
    DispersionTrace dispersion;
    std::vector<SpectrumTrace> spectra; // aligned with dispersion rows
};

// For each DC field value: detuning, dressed frequency, and a full
// reflection spectrum on freq_grid.  Empty grids -> DomainError.
FieldSweepResult field_sweep(const SpectroscopyParams& params,
                             const std::vector<double>& b_grid, double b_r_t,
                             double m0_j_per_t,
                             const std::vector<double>& freq_grid);

// Local minima of s11_sq by 3-point comparison, each refined by parabolic
// interpolation through the bracketing samples; FWHM from linear
// interpolation at the half level between the dip floor and unit baseline.
// Sorted by frequency; fewer than 3 samples -> DomainError.
std::vector<SpectralPeak> extract_peaks(const SpectrumTrace& trace);

// Uniform default probe grid omega_c +- 5*max(g_c, kappa, gamma),
// 4001 points: wide enough to hold both Rabi branches.
std::vector<double> default_frequency_grid(const SpectroscopyParams& params);

} // namespace spincavity
