#include "doctest.h"

#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <string>

#include "helpers.hpp"
#include "spincavity/axisolver.hpp"
#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"
#include "spincavity/geometry.hpp"
#include "spincavity/materials.hpp"
#include "spincavity/mesh.hpp"
#include "spincavity/observables.hpp"

namespace sc = spincavity;
namespace k = spincavity::constants;

namespace {

constexpr double ref_radius = 0.07;
constexpr double ref_height = 0.10;

// empty reference cylinder partitioned into an inner core (r < R/2) and the
// rest, so the closed-form confinement fractions of the sampled mode apply
std::shared_ptr<const sc::AxiMesh> core_partition_mesh(double target) {
    const sc::Material vac = sc::builtin_material("vacuum");
    const sc::AxisymmetricGeometry g{
        ref_radius,
        ref_height,
        {{"core", vac, 0.0, 0.5 * ref_radius, 0.0, ref_height}}};
    return std::make_shared<sc::AxiMesh>(sc::build_mesh(g, target));
}

} // namespace

TEST_CASE("confinement fractions of the sampled cylinder mode match closed forms") {
    const auto mesh = core_partition_mesh(0.5e-3);
    const sc::FieldSolution f = testutil::sampled_te011_field(mesh);

    // analytic fractions for the r < R/2 core of the lowest symmetric TE mode
    CHECK(testutil::close_rel(sc::magnetic_filling_factor(f, "core"),
                              0.5711677601787052, 5e-3));
    CHECK(testutil::close_rel(sc::electric_filling_factor(f, "core"),
                              0.37957731874390443, 5e-3));

    // geometric factor of the same mode, closed form in ohms
    CHECK(testutil::close_rel(sc::geometric_factor(f), 757.1428137649463,
                              2e-2));
}

TEST_CASE("each confinement family sums to one over any partition") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto g = testutil::random_loaded_geometry(rng);
        auto mesh = std::make_shared<const sc::AxiMesh>(
            sc::build_mesh(g, 0.95e-3));
        // reuse the analytic mode shape of the matching empty cylinder as an
        // arbitrary smooth field; partition sums must close regardless
        const sc::FieldSolution f = testutil::sampled_te011_field(mesh);
        const sc::FillingFactors ff = sc::filling_factors(f);
        double sum_m = 0.0, sum_e = 0.0;
        for (const auto& [label, v] : ff.p_m) sum_m += v;
        for (const auto& [label, v] : ff.p_e) sum_e += v;
        CHECK(std::abs(sum_m - 1.0) <= 1e-9);
        CHECK(std::abs(sum_e - 1.0) <= 1e-9);
        for (const auto& [label, v] : ff.p_m) CHECK(v >= 0.0);
        for (const auto& [label, v] : ff.p_e) CHECK(v >= 0.0);
    }
}

TEST_CASE("confinement fractions and geometric factor ignore field scale") {
    const auto mesh = core_partition_mesh(2e-3);
    sc::FieldSolution f = testutil::sampled_te011_field(mesh);
    const double pm = sc::magnetic_filling_factor(f, "core");
    const double pe = sc::electric_filling_factor(f, "core");
    const double gf = sc::geometric_factor(f);
    for (double& v : f.e_phi) v *= 137.0;
    for (double& v : f.h_r) v *= 137.0;
    for (double& v : f.h_z) v *= 137.0;
    CHECK(sc::magnetic_filling_factor(f, "core") ==
          doctest::Approx(pm).epsilon(1e-14));
    CHECK(sc::electric_filling_factor(f, "core") ==
          doctest::Approx(pe).epsilon(1e-14));
    CHECK(sc::geometric_factor(f) == doctest::Approx(gf).epsilon(1e-14));
}

TEST_CASE("asking for a label the mesh does not carry names the known ones") {
    const auto mesh = core_partition_mesh(2e-3);
    const sc::FieldSolution f = testutil::sampled_te011_field(mesh);
    CHECK_THROWS_AS((void)sc::magnetic_filling_factor(f, "nope"),
                    sc::DomainError);
    try {
        (void)sc::magnetic_filling_factor(f, "nope");
    } catch (const sc::DomainError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("nope") != std::string::npos);
        CHECK(msg.find("core") != std::string::npos);
        CHECK(msg.find("vacuum") != std::string::npos);
    }
}

TEST_CASE("loss channels combine harmonically and respect limits") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(sc::q_metal(750.0, 5.77e-3) ==
          doctest::Approx(750.0 / 5.77e-3).epsilon(1e-15));
    CHECK(sc::q_metal(750.0, 0.0) == inf);
    CHECK_THROWS_AS((void)sc::q_metal(-1.0, 1e-3), sc::DomainError);
    CHECK_THROWS_AS((void)sc::q_metal(750.0, -1e-3), sc::DomainError);

    CHECK(sc::q_dielectric(0.25, 1e-5) ==
          doctest::Approx(1.0 / (0.25 * 1e-5)).epsilon(1e-15));
    CHECK(sc::q_dielectric(0.0, 1e-5) == inf);
    CHECK(sc::q_dielectric(0.25, 0.0) == inf);
    CHECK_THROWS_AS((void)sc::q_dielectric(1.5, 1e-5), sc::DomainError);
    CHECK_THROWS_AS((void)sc::q_dielectric(0.5, -1e-5), sc::DomainError);

    CHECK(sc::q_total({2e5, 2e5}) == doctest::Approx(1e5).epsilon(1e-15));
    CHECK(sc::q_total({1e5, inf}) == doctest::Approx(1e5).epsilon(1e-15));
    CHECK(sc::q_total({inf, inf}) == inf);
    CHECK_THROWS_AS((void)sc::q_total({}), sc::DomainError);
    CHECK_THROWS_AS((void)sc::q_total({1e5, -2.0}), sc::DomainError);

    // the combination never exceeds its smallest part
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(3.0, 9.0);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> parts;
        double least = inf;
        for (int j = 0; j < 4; ++j) {
            parts.push_back(std::pow(10.0, u(rng)));
            least = std::min(least, parts.back());
        }
        CHECK(sc::q_total(parts) <= least * (1.0 + 1e-12));
    }

    CHECK(sc::cavity_damping_rate(2.87e9, 1e5) ==
          doctest::Approx(k::two_pi * 2.87e9 / 1e5).epsilon(1e-15));
    CHECK_THROWS_AS((void)sc::cavity_damping_rate(-1.0, 1e5), sc::DomainError);
    CHECK_THROWS_AS((void)sc::cavity_damping_rate(2.87e9, 0.0),
                    sc::DomainError);
}

TEST_CASE("the assembled loss budget is internally consistent") {
    const sc::Material cu = sc::builtin_material("copper");
    const sc::Material dia = sc::builtin_material("diamond");
    const sc::AxisymmetricGeometry g{
        0.03, 0.04, {{"diamond", dia, 0.0, 5e-3, 0.018, 0.022}}};
    auto mesh = std::make_shared<const sc::AxiMesh>(sc::build_mesh(g, 1e-3));
    const auto modes = sc::solve_axisymmetric_te0(mesh, {5.5e9, 7.5e9}, 1);
    REQUIRE(modes.size() == 1);
    const sc::QBudget b = sc::q_budget(*modes[0].field, cu);

    CHECK(b.gf > 0.0);
    CHECK(b.q_met == doctest::Approx(sc::q_metal(b.gf, cu.r_surface))
                         .epsilon(1e-12));
    REQUIRE(b.q_diel.count("diamond") == 1);

    double inv = 1.0 / b.q_met;
    for (const auto& [label, q] : b.q_diel)
        if (std::isfinite(q)) inv += 1.0 / q;
    CHECK(b.q0 == doctest::Approx(1.0 / inv).epsilon(1e-12));
    CHECK(b.q0 <= b.q_met * (1.0 + 1e-12));
    CHECK(b.kappa_c ==
          doctest::Approx(modes[0].omega / b.q0).epsilon(1e-12));
    CHECK_THROWS_AS((void)sc::q_budget(*modes[0].field, dia), sc::DomainError);
}

TEST_CASE("mode volume of the sampled cylinder mode matches the closed form") {
    // integral of |E|^2 over the cavity divided by its peak value:
    // for J1(chi r/R) sin(pi z/H) this is pi R^2 H J0(chi)^2 / (2 max J1^2)
    const auto mesh = core_partition_mesh(0.5e-3);
    const sc::FieldSolution f = testutil::sampled_te011_field(mesh);
    CHECK(testutil::close_rel(sc::mode_volume(f), 3.6873e-4, 5e-3));

    const auto [w_e, w_m] = sc::mode_energies(f);
    CHECK(w_e > 0.0);
    CHECK(w_m > 0.0);
    // the sampled analytic mode is equipartitioned up to quadrature error
    CHECK(testutil::close_rel(w_e, w_m, 1e-3));
}
