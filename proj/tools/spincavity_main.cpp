// spincavity: microwave cavity + spin-ensemble design calculator.
//
// Verbs:
//   solve      resonant modes, filling factors and Q budget of a cavity spec
//   report     coupling figures of merit (exact-si or calibrated pathway)
//   sweep      DC-field sweep producing dispersion.csv / spectra.csv
//   table1     scaling-law comparison against the bundled design dataset
//   materials  dump the material library

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spincavity/analytic_modes.hpp"
#include "spincavity/axisolver.hpp"
#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"
#include "spincavity/mesh.hpp"
#include "spincavity/observables.hpp"
#include "spincavity/reentrant.hpp"
#include "spincavity/reporting.hpp"
#include "spincavity/specfile.hpp"
#include "spincavity/spectra.hpp"
#include "spincavity/spin.hpp"
#include "spincavity/table.hpp"

namespace sc = spincavity;

namespace {

struct GlobalOptions {
    std::string spec_path;
    std::string out_dir = ".";
    std::string format = "text";
};

sc::SpinEnsemble ensemble_from_spec(const sc::CavitySpec& spec) {
    if (!spec.ensemble)
        throw sc::DomainError("spec has no [ensemble] section");
    sc::SpinEnsemble e;
    e.rho = spec.ensemble->rho;
    e.gamma_s = sc::half_linewidth_from_fwhm(
        2.0 * spec.ensemble->gamma_s_over_2pi_hz);
    e.g_factor = spec.ensemble->g_factor;
    e.d_over_h = spec.ensemble->d_over_h_hz;
    e.sample_volume = spec.sample_region_volume();
    e.validate();
    return e;
}

struct SolvedCavity {
    std::vector<sc::ModeResult> modes;
    std::shared_ptr<const sc::AxiMesh> mesh;
};

SolvedCavity solve_meshed(const sc::CavitySpec& spec) {
    if (!spec.target_cell || !spec.solver)
        throw sc::DomainError("spec lacks [mesh]/[solver] sections");
    sc::AxisymmetricGeometry axi;
    if (const auto* g =
            std::get_if<sc::AxisymmetricGeometry>(&spec.geometry.shape))
        axi = *g;
    else if (const auto* g =
                 std::get_if<sc::CylindricalGeometry>(&spec.geometry.shape))
        axi = sc::AxisymmetricGeometry{g->radius, g->height, {}};
    else
        throw sc::DomainError("variant not supported by the mesh solver");
    auto mesh = std::make_shared<sc::AxiMesh>(
        sc::build_mesh(axi, *spec.target_cell));
    sc::FrequencyWindow window{spec.solver->window_low_hz,
                               spec.solver->window_high_hz};
    SolvedCavity solved;
    solved.mesh = mesh;
    solved.modes =
        sc::solve_axisymmetric_te0(mesh, window, spec.solver->n_modes);
    return solved;
}

void print_mode(const sc::ModeResult& mode, const sc::Material& wall) {
    std::printf("mode %s\n", mode.mode_id.c_str());
    std::printf("  frequency    = %.9e Hz\n", mode.frequency);
    if (!mode.field) {
        std::printf("  field-dependent quantities unavailable for this "
                    "solver pathway\n");
        return;
    }
    const sc::FillingFactors factors = sc::filling_factors(*mode.field);
    for (const auto& [label, p_m] : factors.p_m)
        std::printf("  p_m[%-8s] = %.6e    p_e[%-8s] = %.6e\n", label.c_str(),
                    p_m, label.c_str(), factors.p_e.at(label));
    const sc::QBudget budget = sc::q_budget(*mode.field, wall);
    std::printf("  GF           = %.4f ohm\n", budget.gf);
    std::printf("  Q_met        = %.6e\n", budget.q_met);
    for (const auto& [label, q] : budget.q_diel)
        std::printf("  Q_diel[%-8s] = %.6e\n", label.c_str(), q);
    std::printf("  Q0           = %.6e\n", budget.q0);
    std::printf("  kappa_c      = %.6e rad/s (kappa_c/2pi = %.4f kHz)\n",
                budget.kappa_c, budget.kappa_c / (2 * sc::constants::pi) / 1e3);
    if (mode.mode_volume_m3)
        std::printf("  mode volume  = %.6e m^3\n", *mode.mode_volume_m3);
}

int cmd_solve(const GlobalOptions& global) {
    if (global.spec_path.empty())
        throw CLI::ValidationError("solve requires --spec");
    const sc::CavitySpec spec =
        sc::parse_spec(global.spec_path, sc::MaterialLibrary::builtin());

    if (const auto* re =
            std::get_if<sc::ReentrantGeometry>(&spec.geometry.shape)) {
        const double f = sc::reentrant_lumped_frequency(*re);
        std::printf("reentrant lumped model\n");
        std::printf("  frequency    = %.9e Hz\n", f);
        std::printf("  field-dependent quantities unavailable for this "
                    "solver pathway\n");
        if (spec.solver && !(f >= spec.solver->window_low_hz &&
                             f <= spec.solver->window_high_hz)) {
            std::printf("  NOTE: outside requested window\n");
            return 1;
        }
        return 0;
    }

    if (const auto* rect =
            std::get_if<sc::RectangularGeometry>(&spec.geometry.shape)) {
        if (!spec.solver)
            throw sc::DomainError("rectangular solve needs [solver]");
        int found = 0;
        for (int m = 0; m <= 5; ++m)
            for (int n = 0; n <= 5; ++n)
                for (int p = 0; p <= 5; ++p) {
                    if ((m == 0) + (n == 0) + (p == 0) > 1)
                        continue;
                    const double f = sc::analytic_rectangular_mode(
                        rect->a, rect->b, rect->d, m, n, p);
                    if (f < spec.solver->window_low_hz ||
                        f > spec.solver->window_high_hz)
                        continue;
                    std::printf("mode %d%d%d: frequency = %.9e Hz "
                                "(field-dependent quantities unavailable)\n",
                                m, n, p, f);
                    ++found;
                }
        return found > 0 ? 0 : 1;
    }

    const SolvedCavity solved = solve_meshed(spec);
    if (solved.modes.empty()) {
        std::fprintf(stderr, "no mode found inside [%g, %g] Hz\n",
                     spec.solver->window_low_hz, spec.solver->window_high_hz);
        return 1;
    }
    std::printf("%s cavity, %zu x %zu cells, %zu modes in window\n",
                sc::variant_name(spec.geometry), solved.mesh->nr_cells(),
                solved.mesh->nz_cells(), solved.modes.size());
    for (const auto& mode : solved.modes)
        print_mode(mode, spec.geometry.wall);
    return 0;
}

struct ReportInputs {
    std::optional<double> p_m;
    std::optional<double> q0;
    double nu_c_hz = 2.87e9;
    double rho = 1.2e24;
    double gamma_fwhm_hz = 6e6; // FWHM; half-linewidth 3 MHz
    std::string pathway;        // empty: spec decides / default calibrated
};

int cmd_report(const GlobalOptions& global, const ReportInputs& inputs) {
    sc::SpinEnsemble ensemble;
    double p_m = 0.0, q0 = 0.0, nu_c = inputs.nu_c_hz;
    std::string pathway = inputs.pathway;

    if (!global.spec_path.empty()) {
        const sc::CavitySpec spec =
            sc::parse_spec(global.spec_path, sc::MaterialLibrary::builtin());
        if (!spec.ensemble)
            throw CLI::ValidationError(
                "report with --spec requires an [ensemble] section");
        ensemble = ensemble_from_spec(spec);
        const SolvedCavity solved = solve_meshed(spec);
        if (solved.modes.empty())
            throw sc::SolverError("no mode in the spec's solver window");
        const sc::ModeResult& mode = solved.modes.front();
        p_m = sc::magnetic_filling_factor(*mode.field,
                                          spec.ensemble->sample_label);
        const sc::QBudget budget =
            sc::q_budget(*mode.field, spec.geometry.wall);
        q0 = budget.q0;
        nu_c = mode.frequency;
        if (pathway.empty())
            pathway = spec.coupling.pathway;
        std::printf("mode %s at %.9e Hz, sample p_m = %.6e, Q0 = %.6e\n",
                    mode.mode_id.c_str(), nu_c, p_m, q0);
    } else {
        if (!inputs.p_m || !inputs.q0)
            throw CLI::ValidationError(
                "report needs --spec or explicit --p-m and --q0");
        p_m = *inputs.p_m;
        q0 = *inputs.q0;
        ensemble.rho = inputs.rho;
        ensemble.gamma_s = sc::half_linewidth_from_fwhm(inputs.gamma_fwhm_hz);
        if (pathway.empty())
            pathway = "calibrated";
    }

    sc::CouplingReport report;
    if (pathway == "exact-si") {
        report = sc::coupling_report_exact(ensemble, p_m, nu_c, q0);
    } else if (pathway == "calibrated") {
        const auto rows = sc::load_table(sc::builtin_table_path());
        const auto constants = sc::calibrate_table_constants(rows, "TE");
        report = sc::coupling_report_calibrated(ensemble, p_m, nu_c, q0,
                                                constants.k_g_mhz,
                                                constants.k_c_per_mhz2);
    } else {
        throw CLI::ValidationError("--pathway must be exact-si or calibrated");
    }

    if (global.format == "csv")
        std::fputs(sc::coupling_report_csv(report).c_str(), stdout);
    else
        std::fputs(sc::render_coupling_report(report).c_str(), stdout);
    return 0;
}

struct SweepInputs {
    double b_start = 0.0, b_stop = 0.0, b_r = 0.0;
    int b_steps = 0;
    std::optional<double> g_c_mhz;
    std::optional<double> q0;
    double nu_c_hz = 2.87e9;
    double gamma_fwhm_hz = 6e6;
    double alpha = 1.0;
    double g_factor = 2.0028;
};

int cmd_sweep(const GlobalOptions& global, const SweepInputs& inputs) {
    if (inputs.b_steps < 1)
        throw CLI::ValidationError("--b-steps must be >= 1");

    sc::SpectroscopyParams params;
    double m0 = 2.0028 * sc::constants::bohr_magneton;
    std::vector<std::pair<std::string, std::string>> manifest;

    if (!global.spec_path.empty()) {
        const sc::CavitySpec spec =
            sc::parse_spec(global.spec_path, sc::MaterialLibrary::builtin());
        if (!spec.ensemble)
            throw CLI::ValidationError(
                "sweep with --spec requires an [ensemble] section");
        const sc::SpinEnsemble ensemble = ensemble_from_spec(spec);
        const SolvedCavity solved = solve_meshed(spec);
        if (solved.modes.empty())
            throw sc::SolverError("no mode in the spec's solver window");
        const sc::ModeResult& mode = solved.modes.front();
        const double p_m = sc::magnetic_filling_factor(
            *mode.field, spec.ensemble->sample_label);
        const sc::QBudget budget =
            sc::q_budget(*mode.field, spec.geometry.wall);
        params.omega_c = mode.omega;
        params.kappa = budget.kappa_c;
        params.gamma = ensemble.gamma_s;
        params.alpha = spec.coupling.alpha;
        m0 = ensemble.magnetic_moment();
        if (spec.coupling.pathway == "exact-si") {
            params.g_c = sc::collective_coupling(ensemble, p_m, mode.omega);
        } else {
            const auto rows = sc::load_table(sc::builtin_table_path());
            const auto constants = sc::calibrate_table_constants(rows, "TE");
            params.g_c = sc::constants::two_pi * 1e6 *
                         sc::calibrated_coupling(p_m, constants.k_g_mhz);
        }
        manifest.emplace_back("spec", global.spec_path);
        manifest.emplace_back("pathway", spec.coupling.pathway);
    } else {
        if (!inputs.g_c_mhz || !inputs.q0)
            throw CLI::ValidationError(
                "sweep needs --spec or explicit --g-c-mhz and --q0");
        params.omega_c = sc::constants::two_pi * inputs.nu_c_hz;
        params.kappa = params.omega_c / *inputs.q0;
        params.gamma = sc::half_linewidth_from_fwhm(inputs.gamma_fwhm_hz);
        params.g_c = sc::constants::two_pi * 1e6 * *inputs.g_c_mhz;
        params.alpha = inputs.alpha;
        m0 = inputs.g_factor * sc::constants::bohr_magneton;
        manifest.emplace_back("pathway", "explicit");
    }

    std::vector<double> b_grid(inputs.b_steps);
    for (int i = 0; i < inputs.b_steps; ++i)
        b_grid[i] =
            inputs.b_steps == 1
                ? inputs.b_start
                : inputs.b_start + (inputs.b_stop - inputs.b_start) * i /
                                       double(inputs.b_steps - 1);

    const std::vector<double> freq_grid = sc::default_frequency_grid(params);
    const sc::FieldSweepResult result =
        sc::field_sweep(params, b_grid, inputs.b_r, m0, freq_grid);

    manifest.emplace_back("omega_c_rad_s", sc::format_double(params.omega_c));
    manifest.emplace_back("kappa_rad_s", sc::format_double(params.kappa));
    manifest.emplace_back("gamma_rad_s", sc::format_double(params.gamma));
    manifest.emplace_back("g_c_rad_s", sc::format_double(params.g_c));
    manifest.emplace_back("alpha", sc::format_double(params.alpha));
    manifest.emplace_back("m0_j_per_t", sc::format_double(m0));
    manifest.emplace_back("b_start_t", sc::format_double(inputs.b_start));
    manifest.emplace_back("b_stop_t", sc::format_double(inputs.b_stop));
    manifest.emplace_back("b_steps", std::to_string(inputs.b_steps));
    manifest.emplace_back("b_r_t", sc::format_double(inputs.b_r));
    manifest.emplace_back("freq_points",
                          std::to_string(freq_grid.size()));

    namespace fs = std::filesystem;
    fs::create_directories(global.out_dir);
    const fs::path out(global.out_dir);
    sc::write_file_atomic((out / "dispersion.csv").string(),
                          sc::dispersion_csv(result.dispersion));
    sc::write_file_atomic((out / "spectra.csv").string(),
                          sc::spectra_csv(b_grid, result.spectra));
    sc::write_file_atomic((out / "run_manifest.txt").string(),
                          sc::run_manifest(manifest));
    std::printf("wrote %s, %s, %s\n", (out / "dispersion.csv").c_str(),
                (out / "spectra.csv").c_str(),
                (out / "run_manifest.txt").c_str());
    return 0;
}

int cmd_table1(const GlobalOptions& global, const std::string& data_path,
               const std::string& reference, double g_tol, double c_tol) {
    const std::string path =
        data_path.empty() ? sc::builtin_table_path() : data_path;
    const auto rows = sc::load_table(path);
    const sc::ComparisonReport report =
        sc::compare_table(rows, reference, g_tol, c_tol);
    if (global.format == "csv")
        std::fputs(sc::comparison_report_csv(report).c_str(), stdout);
    else
        std::fputs(sc::render_comparison_report(report).c_str(), stdout);
    return report.all_pass ? 0 : 1;
}

int cmd_materials(const GlobalOptions& global) {
    const auto& lib = sc::MaterialLibrary::builtin();
    if (global.format == "csv") {
        std::printf("name,kind,eps_r,tan_delta,r_surface_ohm,source\n");
        for (const auto& m : lib.all())
            std::printf("%s,%s,%s,%s,%s,%s\n", m.name.c_str(),
                        m.kind == sc::MaterialKind::metal ? "metal"
                                                          : "dielectric",
                        sc::format_double(m.eps_r).c_str(),
                        sc::format_double(m.tan_delta).c_str(),
                        sc::format_double(m.r_surface).c_str(),
                        m.source.c_str());
        return 0;
    }
    std::printf("%-12s %-10s %10s %12s %14s  %s\n", "name", "kind", "eps_r",
                "tan_delta", "r_surface", "source");
    for (const auto& m : lib.all()) {
        if (m.kind == sc::MaterialKind::metal)
            std::printf("%-12s %-10s %10s %12s %14s  %s\n", m.name.c_str(),
                        "metal", "-", "-",
                        sc::format_double(m.r_surface).c_str(),
                        m.source.c_str());
        else
            std::printf("%-12s %-10s %10s %12s %14s  %s\n", m.name.c_str(),
                        "dielectric", sc::format_double(m.eps_r).c_str(),
                        sc::format_double(m.tan_delta).c_str(), "-",
                        m.source.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"microwave cavity + spin-ensemble design calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand name

    GlobalOptions global;
    app.add_option("--spec", global.spec_path, "cavity spec file");
    app.add_option("--out", global.out_dir, "output directory");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"csv", "text"}));

    auto* solve = app.add_subcommand("solve", "modes, filling factors, Q");

    ReportInputs report_in;
    auto* report = app.add_subcommand("report", "coupling figures of merit");
    report->add_option("--p-m", report_in.p_m, "magnetic filling factor");
    report->add_option("--q0", report_in.q0, "unloaded quality factor");
    report->add_option("--nu-c", report_in.nu_c_hz, "cavity frequency, Hz");
    report->add_option("--rho", report_in.rho, "spin density, m^-3");
    report->add_option("--gamma-fwhm", report_in.gamma_fwhm_hz,
                       "spin FWHM linewidth, Hz");
    report->add_option("--pathway", report_in.pathway,
                       "exact-si | calibrated");

    SweepInputs sweep_in;
    auto* sweep = app.add_subcommand("sweep", "DC-field sweep to CSV");
    sweep->add_option("--b-start", sweep_in.b_start, "first field, T")
        ->required();
    sweep->add_option("--b-stop", sweep_in.b_stop, "last field, T")
        ->required();
    sweep->add_option("--b-steps", sweep_in.b_steps, "number of field points")
        ->required();
    sweep->add_option("--b-r", sweep_in.b_r, "resonant field, T")->required();
    sweep->add_option("--g-c-mhz", sweep_in.g_c_mhz,
                      "collective coupling / 2pi, MHz");
    sweep->add_option("--q0", sweep_in.q0, "unloaded quality factor");
    sweep->add_option("--nu-c", sweep_in.nu_c_hz, "cavity frequency, Hz");
    sweep->add_option("--gamma-fwhm", sweep_in.gamma_fwhm_hz,
                      "spin FWHM linewidth, Hz");
    sweep->add_option("--alpha", sweep_in.alpha, "external coupling ratio");
    sweep->add_option("--g-factor", sweep_in.g_factor, "Lande factor");

    std::string table_path, table_ref = "TE";
    double g_tol = 1.0, c_tol = 0.025;
    auto* table1 = app.add_subcommand("table1", "dataset scaling-law check");
    table1->add_option("--data", table_path, "dataset CSV path");
    table1->add_option("--reference", table_ref, "reference row label");
    table1->add_option("--g-tol", g_tol, "coupling tolerance, MHz");
    table1->add_option("--c-tol", c_tol, "relative cooperativity tolerance");

    auto* materials = app.add_subcommand("materials", "dump material library");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(global);
        if (report->parsed())
            return cmd_report(global, report_in);
        if (sweep->parsed())
            return cmd_sweep(global, sweep_in);
        if (table1->parsed())
            return cmd_table1(global, table_path, table_ref, g_tol, c_tol);
        if (materials->parsed())
            return cmd_materials(global);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const sc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
