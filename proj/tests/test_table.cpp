#include "doctest.h"

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "spincavity/errors.hpp"
#include "spincavity/table.hpp"

namespace sc = spincavity;

namespace {

const std::vector<sc::TableRow>& rows() {
    static const std::vector<sc::TableRow> r =
        sc::load_table(sc::builtin_table_path());
    return r;
}

} // namespace

TEST_CASE("the bundled dataset loads with every expected design") {
    const auto& r = rows();
    REQUIRE(r.size() == 8);
    const char* labels[] = {"TE",          "TE*",           "TM",
                            "TM**",        "TM-periodic",   "hybrid-copper",
                            "hybrid-Nb",   "CPW"};
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r[i].mode_label == labels[i]);
        CHECK_NOTHROW(r[i].validate());
    }
    CHECK(r[0].p_m() == doctest::Approx(0.084).epsilon(1e-12));
    CHECK(r[0].q0 == 127000.0);
    CHECK(r[0].g_c_mhz == 43.0);
    CHECK(r[0].c_factor == 348.0);
    CHECK(r[6].q0 == 1000.0);
    CHECK(r[6].g_c_mhz == 102.0);
}

TEST_CASE("calibrating on the anchor row freezes both constants") {
    const auto cal = sc::calibrate_table_constants(rows(), "TE");
    CHECK(cal.reference == "TE");
    CHECK(cal.k_g_mhz == doctest::Approx(148.3641).epsilon(1e-5));
    CHECK(cal.k_c_per_mhz2 ==
          doctest::Approx(1.4819672689642837e-06).epsilon(1e-12));
    CHECK_THROWS_AS(
        (void)sc::calibrate_table_constants(rows(), "unlisted-design"),
        sc::LookupError);
}

TEST_CASE("every design follows the two scaling laws within tolerance") {
    const auto report = sc::compare_table(rows(), "TE");
    CHECK(report.all_pass);
    REQUIRE(report.rows.size() == 8);

    // frozen external evaluations of k_g sqrt(p_m) per design
    const struct {
        const char* label;
        double predicted;
    } expected_g[] = {
        {"TE", 43.0},          {"TE*", 67.50},        {"TM", 46.92},
        {"TM**", 71.15},       {"TM-periodic", 77.09}, {"hybrid-copper", 101.82},
        {"hybrid-Nb", 101.61}, {"CPW", 51.18},
    };
    // frozen external evaluations of k_c g^2 q0 per design
    const struct {
        const char* label;
        double predicted;
    } expected_c[] = {
        {"TE", 348.0},          {"TE*", 2055.78},      {"TM", 3.27},
        {"TM**", 9.47},         {"TM-periodic", 4.45},  {"hybrid-copper", 7.71},
        {"hybrid-Nb", 15.42},   {"CPW", 7.34},
    };

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        CAPTURE(row.mode_label);
        CHECK(row.mode_label == expected_g[i].label);
        CHECK(testutil::close_rel(row.predicted_g_c_mhz,
                                  expected_g[i].predicted, 2e-4));
        CHECK(testutil::close_rel(row.predicted_c, expected_c[i].predicted,
                                  2e-3));
        CHECK(row.g_c_pass);
        CHECK(row.c_pass);
        CHECK(row.g_c_abs_error_mhz <= 1.0);
        CHECK(row.c_rel_error <= 0.025);
    }

    // the anchor row reproduces itself exactly
    CHECK(report.rows[0].is_reference);
    CHECK(report.rows[0].predicted_g_c_mhz ==
          doctest::Approx(43.0).epsilon(1e-12));
    CHECK(report.rows[0].predicted_c ==
          doctest::Approx(348.0).epsilon(1e-12));

    // implied linewidth column: median near 3 MHz across the dataset
    CHECK(testutil::close_rel(report.median_implied_gamma_mhz, 2.991, 1e-2));
}

TEST_CASE("comparison is deterministic") {
    const auto a = sc::compare_table(rows(), "TE");
    const auto b = sc::compare_table(rows(), "TE");
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].predicted_g_c_mhz == b.rows[i].predicted_g_c_mhz);
        CHECK(a.rows[i].predicted_c == b.rows[i].predicted_c);
        CHECK(a.rows[i].implied_gamma_mhz == b.rows[i].implied_gamma_mhz);
    }
}

TEST_CASE("malformed datasets are rejected with location info") {
    // wrong header
    CHECK_THROWS_AS((void)sc::load_table_text(
                        "label,p_m\nTE,84\n", "mem"),
                    sc::ParseError);
    // wrong column count
    try {
        (void)sc::load_table_text(
            "mode_label,p_m_e3,p_e_e3,q0,g_c_mhz,volume_cm3,c_factor\n"
            "TE,84,0.63,127000,43,14\n",
            "mem");
        CHECK(false);
    } catch (const sc::ParseError& e) {
        CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
    }
    // non-numeric field
    CHECK_THROWS_AS((void)sc::load_table_text(
                        "mode_label,p_m_e3,p_e_e3,q0,g_c_mhz,volume_cm3,"
                        "c_factor\nTE,eighty,0.63,127000,43,14,348\n",
                        "mem"),
                    sc::ParseError);
    // a zero in a physical column violates row validation
    CHECK_THROWS_AS((void)sc::load_table_text(
                        "mode_label,p_m_e3,p_e_e3,q0,g_c_mhz,volume_cm3,"
                        "c_factor\nTE,0,0.63,127000,43,14,348\n",
                        "mem"),
                    sc::ParseError);
    // the lookup failure lists the labels that do exist
    try {
        (void)sc::calibrate_table_constants(rows(), "unlisted-design");
        CHECK(false);
    } catch (const sc::LookupError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("unlisted-design") != std::string::npos);
        CHECK(msg.find("'TE'") != std::string::npos);
        CHECK(msg.find("'CPW'") != std::string::npos);
    }
}
