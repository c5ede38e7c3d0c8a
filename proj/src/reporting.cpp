#include "spincavity/reporting.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

const char* tool_version() {
#ifdef SPINCAVITY_VERSION
    return "spincavity " SPINCAVITY_VERSION;
#else
    return "spincavity (unversioned)";
#endif
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{})
        throw DomainError("format_double: value not representable");
    return std::string(buf, ptr);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out)
            throw IoError("short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot rename '" + tmp.string() + "' to '" +
                      target.string() + "': " + ec.message());
    }
}

std::string dispersion_csv(const DispersionTrace& trace) {
    std::ostringstream os;
    os << "b_tesla,delta_rad_s,omega_rad_s\n";
    for (std::size_t i = 0; i < trace.b_field.size(); ++i)
        os << format_double(trace.b_field[i]) << ","
           << format_double(trace.delta[i]) << ","
           << format_double(trace.dressed_freq[i]) << "\n";
    return os.str();
}

std::string spectra_csv(const std::vector<double>& b_field,
                        const std::vector<SpectrumTrace>& spectra) {
    if (b_field.size() != spectra.size())
        throw DomainError("spectra_csv: field grid and spectra differ in size");
    std::ostringstream os;
    os << "b_tesla,omega_rad_s,s11_sq\n";
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        const std::string b = format_double(b_field[i]);
        const SpectrumTrace& t = spectra[i];
        for (std::size_t k = 0; k < t.freq.size(); ++k)
            os << b << "," << format_double(t.freq[k]) << ","
               << format_double(t.s11_sq[k]) << "\n";
    }
    return os.str();
}

std::string run_manifest(
    const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ostringstream os;
    os << "tool = " << tool_version() << "\n";
    for (const auto& [key, value] : entries)
        os << key << " = " << value << "\n";
    return os.str();
}

namespace {

std::string mhz(double rate_rad_s) {
    std::ostringstream os;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", rate_rad_s / (constants::two_pi * 1e6));
    os << buf << " MHz";
    return os.str();
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

} // namespace

std::string render_coupling_report(const CouplingReport& report) {
    std::ostringstream os;
    os << "coupling report (pathway: " << report.pathway << ")\n";
    os << "  inputs: p_m = " << format_double(report.p_m)
       << ", Q0 = " << format_double(report.q0)
       << ", nu_c = " << format_double(report.nu_c) << " Hz\n";
    os << "  ensemble: " << report.ensemble_summary << "\n";
    os << "  g_c    = " << fixed(report.g_c_mhz, 4) << " MHz ("
       << format_double(report.g_c) << " rad/s)\n";
    if (report.n_spins >= 1.0)
        os << "  N      = " << format_double(report.n_spins)
           << "  ->  g_s = " << format_double(report.g_s) << " rad/s ("
           << mhz(report.g_s) << ")\n";
    else
        os << "  N      = " << format_double(report.n_spins)
           << "  (g_s unavailable: no sample volume)\n";
    os << "  kappa_c = " << mhz(report.kappa_c) << ", gamma_s = "
       << mhz(report.gamma_s) << "\n";
    os << "  C      = " << fixed(report.cooperativity, 4) << "\n";
    os << "  regime = " << regime_name(report.regime) << "\n";
    if (report.pathway == "exact-si")
        os << "  note: closed-form SI evaluation; differs from the "
              "dataset-calibrated law by a constant factor\n";
    else
        os << "  note: dataset-calibrated square-root law, not the "
              "closed-form SI evaluation\n";
    return os.str();
}

std::string coupling_report_csv(const CouplingReport& report) {
    std::ostringstream os;
    os << "pathway,p_m,q0,nu_c_hz,g_c_rad_s,g_c_mhz,g_s_rad_s,n_spins,"
          "kappa_c_rad_s,gamma_s_rad_s,cooperativity,regime\n";
    os << report.pathway << "," << format_double(report.p_m) << ","
       << format_double(report.q0) << "," << format_double(report.nu_c) << ","
       << format_double(report.g_c) << "," << format_double(report.g_c_mhz)
       << "," << format_double(report.g_s) << ","
       << format_double(report.n_spins) << ","
       << format_double(report.kappa_c) << ","
       << format_double(report.gamma_s) << ","
       << format_double(report.cooperativity) << ","
       << regime_name(report.regime) << "\n";
    return os.str();
}

std::string render_comparison_report(const ComparisonReport& report) {
    std::ostringstream os;
    os << "dataset scaling-law comparison (reference row: "
       << report.constants.reference << ")\n";
    os << "  k_g = " << fixed(report.constants.k_g_mhz, 4)
       << " MHz, k_c = " << format_double(report.constants.k_c_per_mhz2)
       << " MHz^-2\n";
    os << "  tolerances: |dg_c| <= " << format_double(report.g_c_tol_mhz)
       << " MHz, |dC|/C <= " << format_double(report.c_rel_tol) << "\n";
    os << "  row            g_c(table)  g_c(pred)  |err|   C(table)  C(pred)"
          "   rel.err  verdict\n";
    for (const auto& row : report.rows) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "  %-14s %9.2f %10.2f %6.3f %10.2f %9.2f %8.4f  %s%s\n",
                      row.mode_label.c_str(), row.table_g_c_mhz,
                      row.predicted_g_c_mhz, row.g_c_abs_error_mhz,
                      row.table_c, row.predicted_c, row.c_rel_error,
                      row.g_c_pass && row.c_pass ? "pass" : "FAIL",
                      row.is_reference ? " (reference)" : "");
        os << line;
    }
    os << "  implied spin half-linewidth (median over rows, from "
          "C = g^2/(2 kappa gamma) with the coupling column read as Mrad/s): "
       << fixed(report.median_implied_gamma_mhz, 3) << " MHz\n";
    os << "  overall: " << (report.all_pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

std::string comparison_report_csv(const ComparisonReport& report) {
    std::ostringstream os;
    os << "mode_label,is_reference,table_g_c_mhz,predicted_g_c_mhz,"
          "g_c_abs_error_mhz,table_c,predicted_c,c_rel_error,g_c_pass,c_pass,"
          "implied_gamma_mhz\n";
    for (const auto& row : report.rows)
        os << row.mode_label << "," << (row.is_reference ? 1 : 0) << ","
           << format_double(row.table_g_c_mhz) << ","
           << format_double(row.predicted_g_c_mhz) << ","
           << format_double(row.g_c_abs_error_mhz) << ","
           << format_double(row.table_c) << ","
           << format_double(row.predicted_c) << ","
           << format_double(row.c_rel_error) << "," << (row.g_c_pass ? 1 : 0)
           << "," << (row.c_pass ? 1 : 0) << ","
           << format_double(row.implied_gamma_mhz) << "\n";
    return os.str();
}

} // namespace spincavity
