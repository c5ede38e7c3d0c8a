#include "spincavity/spin.hpp"

#include <cmath>
#include <sstream>

#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

constexpr std::array<std::array<double, 3>, 4> nv_axes_unnormalized{{
    {{1.0, 1.0, 1.0}},
    {{1.0, -1.0, -1.0}},
    {{-1.0, 1.0, -1.0}},
    {{-1.0, -1.0, 1.0}},
}};

std::string format_rate_mhz(double rate_rad_s) {
    std::ostringstream os;
    os << rate_rad_s / (constants::two_pi * 1e6) << " MHz";
    return os.str();
}

std::string summarize(const SpinEnsemble& e) {
    std::ostringstream os;
    os << "rho=" << e.rho << " m^-3, gamma_s/2pi="
       << format_rate_mhz(e.gamma_s) << ", g=" << e.g_factor
       << ", D/h=" << e.d_over_h << " Hz, V=" << e.sample_volume << " m^3";
    return os.str();
}

Regime regime_from(double g_c, double kappa_c, double gamma_s, double coop) {
    if (g_c > gamma_s && g_c > kappa_c)
        return Regime::strong;
    if (coop > 1.0)
        return Regime::high_cooperativity;
    return Regime::weak;
}

// Shared tail of the two report builders: spin statistics, regime, echo.
// Runs after the pathway has set g_c and cooperativity so the regime label
// reflects the same pathway's numbers.
void finish_report(CouplingReport& report, const SpinEnsemble& ensemble,
                   double p_m, double nu_c_hz, double q0) {
    report.n_spins = spin_count(ensemble);
    report.g_s =
        report.n_spins >= 1.0
            ? single_spin_coupling(report.g_c, report.n_spins)
            : 0.0;
    report.kappa_c = constants::two_pi * nu_c_hz / q0;
    report.gamma_s = ensemble.gamma_s;
    report.regime = regime_from(report.g_c, report.kappa_c, report.gamma_s,
                                report.cooperativity);
    report.p_m = p_m;
    report.q0 = q0;
    report.nu_c = nu_c_hz;
    report.ensemble_summary = summarize(ensemble);
}

} // namespace

void SpinEnsemble::validate() const {
    if (!(rho > 0.0))
        throw DomainError("spin ensemble: rho must be positive");
    if (!(gamma_s > 0.0))
        throw DomainError("spin ensemble: gamma_s must be positive");
    if (!(g_factor > 0.0))
        throw DomainError("spin ensemble: g_factor must be positive");
    if (!(d_over_h > 0.0))
        throw DomainError("spin ensemble: d_over_h must be positive");
    if (sample_volume < 0.0)
        throw DomainError("spin ensemble: sample_volume must be >= 0");
    if (t2_star) {
        if (!(*t2_star > 0.0))
            throw DomainError("spin ensemble: t2_star must be positive");
        const double implied = half_linewidth_from_t2_star(*t2_star);
        if (std::abs(gamma_s - implied) > 1e-9 * implied)
            throw DomainError(
                "spin ensemble: gamma_s inconsistent with 2 / t2_star");
    }
}

double half_linewidth_from_fwhm(double fwhm_hz) {
    if (!(fwhm_hz > 0.0))
        throw DomainError("half_linewidth_from_fwhm: FWHM must be positive");
    return constants::two_pi * fwhm_hz / 2.0;
}

double half_linewidth_from_t2_star(double t2_star_s) {
    if (!(t2_star_s > 0.0))
        throw DomainError("half_linewidth_from_t2_star: T2* must be positive");
    return 2.0 / t2_star_s;
}

std::string regime_name(Regime regime) {
    switch (regime) {
    case Regime::weak:
        return "weak";
    case Regime::high_cooperativity:
        return "high-cooperativity";
    case Regime::strong:
        return "strong";
    }
    throw DomainError("regime_name: unknown regime");
}

double collective_coupling(const SpinEnsemble& ensemble, double p_m,
                           double omega_c) {
    ensemble.validate();
    if (!(p_m >= 0.0 && p_m <= 1.0))
        throw DomainError("collective_coupling: p_m must lie in [0,1]");
    if (!(omega_c > 0.0))
        throw DomainError("collective_coupling: omega_c must be positive");
    const double m0 = ensemble.magnetic_moment();
    return 0.5 * m0 *
           std::sqrt(ensemble.rho * constants::mu0 * omega_c * p_m /
                     constants::hbar);
}

double calibrated_coupling(double p_m, double k_g_mhz) {
    if (!(k_g_mhz > 0.0))
        throw DomainError("calibrated_coupling: k_g must be positive");
    if (!(p_m >= 0.0 && p_m <= 1.0))
        throw DomainError("calibrated_coupling: p_m must lie in [0,1]");
    return k_g_mhz * std::sqrt(p_m);
}

double spin_count(const SpinEnsemble& ensemble) {
    return ensemble.rho * ensemble.sample_volume;
}

double single_spin_coupling(double g_c, double n_spins) {
    if (!(n_spins >= 1.0))
        throw DomainError("single_spin_coupling: need at least one spin");
    return g_c / std::sqrt(n_spins);
}

double cooperativity(double g_c, double kappa_c, double gamma_s) {
    if (!(kappa_c > 0.0))
        throw DomainError("cooperativity: kappa_c must be positive");
    if (!(gamma_s > 0.0))
        throw DomainError("cooperativity: gamma_s must be positive");
    return g_c * g_c / (2.0 * kappa_c * gamma_s);
}

double calibrated_cooperativity(double g_c_mhz, double q0,
                                double k_c_per_mhz2) {
    if (!(k_c_per_mhz2 > 0.0))
        throw DomainError("calibrated_cooperativity: k_c must be positive");
    if (!(q0 > 0.0))
        throw DomainError("calibrated_cooperativity: q0 must be positive");
    return k_c_per_mhz2 * g_c_mhz * g_c_mhz * q0;
}

Regime regime_classify(double g_c, double kappa_c, double gamma_s) {
    return regime_from(g_c, kappa_c, gamma_s,
                       cooperativity(g_c, kappa_c, gamma_s));
}

std::array<double, 4> nv_orientation_angles(
    const std::array<double, 3>& b_direction) {
    const double norm = std::sqrt(b_direction[0] * b_direction[0] +
                                  b_direction[1] * b_direction[1] +
                                  b_direction[2] * b_direction[2]);
    if (std::abs(norm - 1.0) > 1e-9)
        throw DomainError("nv_orientation_angles: direction must be a unit "
                          "vector (|b| within 1e-9 of 1)");
    std::array<double, 4> angles{};
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    for (std::size_t k = 0; k < 4; ++k) {
        double dot = 0.0;
        for (int i = 0; i < 3; ++i)
            dot += b_direction[i] * nv_axes_unnormalized[k][i] * inv_sqrt3;
        dot = std::clamp(dot / norm, -1.0, 1.0);
        angles[k] = std::acos(dot) * 180.0 / constants::pi;
    }
    return angles;
}

std::pair<double, double> nv_transition_frequencies(
    const SpinEnsemble& ensemble, double b_magnitude_t, double angle_deg) {
    if (b_magnitude_t < 0.0)
        throw DomainError("nv_transition_frequencies: |B| must be >= 0");
    const double zeeman = ensemble.magnetic_moment() / constants::planck *
                          b_magnitude_t *
                          std::cos(angle_deg * constants::pi / 180.0);
    return {ensemble.d_over_h - zeeman, ensemble.d_over_h + zeeman};
}

CouplingReport coupling_report_exact(const SpinEnsemble& ensemble, double p_m,
                                     double nu_c_hz, double q0) {
    if (!(nu_c_hz > 0.0) || !(q0 > 0.0))
        throw DomainError("coupling report: nu_c and q0 must be positive");
    CouplingReport report;
    report.pathway = "exact-si";
    report.g_c =
        collective_coupling(ensemble, p_m, constants::two_pi * nu_c_hz);
    report.g_c_mhz = report.g_c / (constants::two_pi * 1e6);
    report.cooperativity = cooperativity(
        report.g_c, constants::two_pi * nu_c_hz / q0, ensemble.gamma_s);
    finish_report(report, ensemble, p_m, nu_c_hz, q0);
    return report;
}

CouplingReport coupling_report_calibrated(const SpinEnsemble& ensemble,
                                          double p_m, double nu_c_hz,
                                          double q0, double k_g_mhz,
                                          double k_c_per_mhz2) {
    if (!(nu_c_hz > 0.0) || !(q0 > 0.0))
        throw DomainError("coupling report: nu_c and q0 must be positive");
    ensemble.validate();
    CouplingReport report;
    report.pathway = "calibrated";
    report.g_c_mhz = calibrated_coupling(p_m, k_g_mhz);
    report.g_c = constants::two_pi * 1e6 * report.g_c_mhz;
    report.cooperativity =
        calibrated_cooperativity(report.g_c_mhz, q0, k_c_per_mhz2);
    finish_report(report, ensemble, p_m, nu_c_hz, q0);
    return report;
}

} // namespace spincavity
