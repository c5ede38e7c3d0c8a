#include "spincavity/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"
#include "spincavity/materials.hpp"

namespace spincavity {

void TableRow::validate() const {
    if (mode_label.empty())
        throw DomainError("table row: empty mode label");
    const double values[] = {p_m_e3, p_e_e3, q0, g_c_mhz, volume_cm3, c_factor};
    for (double v : values)
        if (!(v > 0.0))
            throw DomainError("table row '" + mode_label +
                              "': all values must be positive");
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_cell(const std::string& text, std::string_view origin,
                  int line_no, const char* column) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        std::ostringstream os;
        os << origin << ":" << line_no << ": bad number '" << text
           << "' in column " << column;
        throw ParseError(os.str());
    }
    return value;
}

} // namespace

std::vector<TableRow> load_table_text(std::string_view text,
                                      std::string_view origin) {
    static const char* expected_header =
        "mode_label,p_m_e3,p_e_e3,q0,g_c_mhz,volume_cm3,c_factor";
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            if (line != expected_header) {
                std::ostringstream os;
                os << origin << ":" << line_no << ": expected header '"
                   << expected_header << "'";
                throw ParseError(os.str());
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 7) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": expected 7 columns, got "
               << fields.size();
            throw ParseError(os.str());
        }
        TableRow row;
        row.mode_label = fields[0];
        row.p_m_e3 = parse_cell(fields[1], origin, line_no, "p_m_e3");
        row.p_e_e3 = parse_cell(fields[2], origin, line_no, "p_e_e3");
        row.q0 = parse_cell(fields[3], origin, line_no, "q0");
        row.g_c_mhz = parse_cell(fields[4], origin, line_no, "g_c_mhz");
        row.volume_cm3 = parse_cell(fields[5], origin, line_no, "volume_cm3");
        row.c_factor = parse_cell(fields[6], origin, line_no, "c_factor");
        try {
            row.validate();
        } catch (const DomainError& e) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": " << e.what();
            throw ParseError(os.str());
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw ParseError(std::string(origin) + ":1: empty dataset");
    return rows;
}

std::vector<TableRow> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open dataset '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_table_text(buf.str(), path);
}

std::string builtin_table_path() {
    return default_data_dir() + "/table1.csv";
}

CalibrationConstants calibrate_table_constants(
    const std::vector<TableRow>& rows, const std::string& reference_label) {
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const TableRow& r) {
                                     return r.mode_label == reference_label;
                                 });
    if (it == rows.end()) {
        std::ostringstream os;
        os << "no dataset row labeled '" << reference_label << "'; rows:";
        for (const auto& r : rows)
            os << " '" << r.mode_label << "'";
        throw LookupError(os.str());
    }
    it->validate();
    CalibrationConstants constants;
    constants.reference = reference_label;
    constants.k_g_mhz = it->g_c_mhz / std::sqrt(it->p_m());
    constants.k_c_per_mhz2 =
        it->c_factor / (it->g_c_mhz * it->g_c_mhz * it->q0);
    return constants;
}

ComparisonReport compare_table(const std::vector<TableRow>& rows,
                               const std::string& reference_label,
                               double g_c_tol_mhz, double c_rel_tol) {
    ComparisonReport report;
    report.constants = calibrate_table_constants(rows, reference_label);
    report.g_c_tol_mhz = g_c_tol_mhz;
    report.c_rel_tol = c_rel_tol;
    report.all_pass = true;

    std::vector<double> gammas;
    for (const auto& row : rows) {
        row.validate();
        RowComparison cmp;
        cmp.mode_label = row.mode_label;
        cmp.is_reference = row.mode_label == reference_label;
        cmp.table_g_c_mhz = row.g_c_mhz;
        cmp.predicted_g_c_mhz =
            report.constants.k_g_mhz * std::sqrt(row.p_m());
        cmp.g_c_abs_error_mhz =
            std::abs(cmp.predicted_g_c_mhz - cmp.table_g_c_mhz);
        cmp.table_c = row.c_factor;
        cmp.predicted_c = report.constants.k_c_per_mhz2 * row.g_c_mhz *
                          row.g_c_mhz * row.q0;
        cmp.c_rel_error =
            std::abs(cmp.predicted_c - cmp.table_c) / cmp.table_c;
        cmp.g_c_pass = cmp.g_c_abs_error_mhz <= g_c_tol_mhz;
        cmp.c_pass = cmp.c_rel_error <= c_rel_tol;

        const double g_rad_s = row.g_c_mhz * 1e6; // Mrad/s column reading
        const double kappa_c = constants::two_pi * report.nu_c_hz / row.q0;
        cmp.implied_gamma_mhz = g_rad_s * g_rad_s /
                                (2.0 * kappa_c * row.c_factor) /
                                (constants::two_pi * 1e6);
        gammas.push_back(cmp.implied_gamma_mhz);

        report.all_pass = report.all_pass && cmp.g_c_pass && cmp.c_pass;
        report.rows.push_back(std::move(cmp));
    }

    std::sort(gammas.begin(), gammas.end());
    const std::size_t n = gammas.size();
    if (n > 0)
        report.median_implied_gamma_mhz =
            (n % 2 == 1) ? gammas[n / 2]
                         : 0.5 * (gammas[n / 2 - 1] + gammas[n / 2]);
    return report;
}

} // namespace spincavity
