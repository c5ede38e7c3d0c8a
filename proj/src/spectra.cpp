#include "spincavity/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

double s11_squared(const SpectroscopyParams& p, double omega) {
    const std::complex<double> i(0.0, 1.0);
    const double x = omega - p.omega_c;
    // Probe detuning from the spin line at omega_c - delta.
    const std::complex<double> spin_term =
        p.g_c * p.g_c / (i * (x + p.delta) - p.gamma);
    const std::complex<double> s11 =
        1.0 + p.alpha * p.kappa / (i * x - p.kappa + spin_term);
    return std::norm(s11);
}

// Vertex of the parabola through three samples around a discrete minimum,
// clamped to the bracketing interval.
double parabolic_vertex(double x0, double y0, double x1, double y1, double x2,
                        double y2) {
    const double d1 = (y1 - y0) / (x1 - x0);
    const double d2 = (y2 - y1) / (x2 - x1);
    const double curvature = (d2 - d1) / (x2 - x0);
    if (curvature <= 0.0)
        return x1;
    const double vertex = 0.5 * (x0 + x1 - d1 / curvature);
    return std::clamp(vertex, x0, x2);
}

// Interpolated crossing of the half level walking away from sample index i;
// returns false when the trace reaches the array end or turns back down
// before crossing (overlapping neighbor dip).
bool half_crossing(const SpectrumTrace& t, std::size_t i, int step,
                   double level, double& x_out) {
    std::size_t j = i;
    while (true) {
        if ((step < 0 && j == 0) || (step > 0 && j + 1 == t.freq.size()))
            return false;
        const std::size_t k = j + step;
        if (t.s11_sq[k] >= level) {
            const double f = (level - t.s11_sq[j]) /
                             (t.s11_sq[k] - t.s11_sq[j]);
            x_out = t.freq[j] + f * (t.freq[k] - t.freq[j]);
            return true;
        }
        if (t.s11_sq[k] < t.s11_sq[j])
            return false;
        j = k;
    }
}

} // namespace

void SpectroscopyParams::validate() const {
    if (!(omega_c > 0.0))
        throw DomainError("spectroscopy: omega_c must be positive");
    if (!(kappa > 0.0))
        throw DomainError("spectroscopy: kappa must be positive");
    if (!(gamma > 0.0))
        throw DomainError("spectroscopy: gamma must be positive");
    if (alpha < 0.0)
        throw DomainError("spectroscopy: alpha must be >= 0");
    if (g_c < 0.0)
        throw DomainError("spectroscopy: g_c must be >= 0");
}

SpectrumTrace reflection_spectrum(const SpectroscopyParams& params,
                                  const std::vector<double>& freq_grid) {
    params.validate();
    if (freq_grid.empty())
        throw DomainError("reflection_spectrum: empty frequency grid");
    SpectrumTrace trace;
    trace.params = params;
    trace.freq = freq_grid;
    trace.s11_sq.reserve(freq_grid.size());
    for (double w : freq_grid)
        trace.s11_sq.push_back(s11_squared(params, w));
    return trace;
}

double detuning_from_field(double b_t, double b_r_t, double m0_j_per_t) {
    return m0_j_per_t * (b_t - b_r_t) / constants::hbar;
}

double dressed_mode_frequency(double omega_c, double g_c, double delta,
                              double gamma) {
    if (!(gamma > 0.0))
        throw DomainError("dressed_mode_frequency: gamma must be positive");
    return omega_c + g_c * g_c * delta / (delta * delta + gamma * gamma);
}

FieldSweepResult field_sweep(const SpectroscopyParams& params,
                             const std::vector<double>& b_grid, double b_r_t,
                             double m0_j_per_t,
                             const std::vector<double>& freq_grid) {
    params.validate();
    if (b_grid.empty())
        throw DomainError("field_sweep: empty field grid");
    if (freq_grid.empty())
        throw DomainError("field_sweep: empty frequency grid");

    FieldSweepResult result;
    result.dispersion.b_field = b_grid;
    for (double b : b_grid) {
        const double delta = detuning_from_field(b, b_r_t, m0_j_per_t);
        SpectroscopyParams at_b = params;
        at_b.delta = delta;
        result.dispersion.delta.push_back(delta);
        result.dispersion.dressed_freq.push_back(dressed_mode_frequency(
            params.omega_c, params.g_c, delta, params.gamma));
        result.spectra.push_back(reflection_spectrum(at_b, freq_grid));
    }
    return result;
}

std::vector<SpectralPeak> extract_peaks(const SpectrumTrace& trace) {
    const std::size_t n = trace.freq.size();
    if (n < 3)
        throw DomainError("extract_peaks: need at least 3 samples");
    std::vector<SpectralPeak> peaks;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(trace.s11_sq[i] < trace.s11_sq[i - 1] &&
              trace.s11_sq[i] < trace.s11_sq[i + 1]))
            continue;
        SpectralPeak peak;
        peak.frequency = parabolic_vertex(
            trace.freq[i - 1], trace.s11_sq[i - 1], trace.freq[i],
            trace.s11_sq[i], trace.freq[i + 1], trace.s11_sq[i + 1]);
        peak.depth = 1.0 - trace.s11_sq[i];
        const double level = 0.5 * (1.0 + trace.s11_sq[i]);
        double left = 0.0, right = 0.0;
        if (half_crossing(trace, i, -1, level, left) &&
            half_crossing(trace, i, +1, level, right))
            peak.fwhm = right - left;
        peaks.push_back(peak);
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const SpectralPeak& a, const SpectralPeak& b) {
                  return a.frequency < b.frequency;
              });
    return peaks;
}

std::vector<double> default_frequency_grid(const SpectroscopyParams& params) {
    params.validate();
    const double span = 5.0 * std::max({params.g_c, params.kappa, params.gamma});
    const std::size_t n = 4001;
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k)
        grid[k] = params.omega_c - span +
                  2.0 * span * static_cast<double>(k) /
                      static_cast<double>(n - 1);
    return grid;
}

} // namespace spincavity
