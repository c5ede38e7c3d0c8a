#include "doctest.h"

#include <cmath>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"
#include "spincavity/materials.hpp"

namespace sc = spincavity;
namespace k = spincavity::constants;

TEST_CASE("photon energy agrees between h*nu and hbar*2pi*nu") {
    const double nu = 2.87e9;
    const double e1 = k::planck * nu;
    const double e2 = k::hbar * k::two_pi * nu;
    CHECK(std::abs(e1 - e2) <= 1e-12 * e1);
}

TEST_CASE("builtin library provides the expected materials") {
    for (const char* name :
         {"vacuum", "copper", "diamond", "sapphire", "rutile", "fused-silica"}) {
        const sc::Material m = sc::builtin_material(name);
        CHECK(m.name == name);
    }
    const sc::Material vac = sc::builtin_material("vacuum");
    CHECK(vac.kind == sc::MaterialKind::dielectric);
    CHECK(vac.eps_r == 1.0);
    CHECK(vac.tan_delta == 0.0);

    const sc::Material cu = sc::builtin_material("copper");
    CHECK(cu.kind == sc::MaterialKind::metal);
    CHECK(cu.r_surface == doctest::Approx(5.77e-3));

    const sc::Material dia = sc::builtin_material("diamond");
    CHECK(dia.eps_r == doctest::Approx(5.7));
    CHECK(dia.tan_delta == doctest::Approx(1.0e-5));

    CHECK(sc::builtin_material("sapphire").eps_r == doctest::Approx(9.3));
    CHECK(sc::builtin_material("rutile").eps_r == doctest::Approx(113.0));
    CHECK(sc::builtin_material("fused-silica").eps_r == doctest::Approx(3.82));
}

TEST_CASE("unknown material names raise a lookup error listing the library") {
    CHECK_THROWS_AS((void)sc::builtin_material("unobtainium"), sc::LookupError);
    try {
        (void)sc::builtin_material("unobtainium");
    } catch (const sc::LookupError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("unobtainium") != std::string::npos);
        CHECK(msg.find("copper") != std::string::npos);
    }
}

TEST_CASE("material text parsing enforces kind-specific fields") {
    const char* good =
        "alumina dielectric 9.8 1e-8 1 - ref\n"
        "brass   metal      -   -    1 7e-3 ref\n";
    const sc::MaterialLibrary lib = sc::MaterialLibrary::from_text(good, "mem");
    CHECK(lib.get("alumina").eps_r == doctest::Approx(9.8));
    CHECK(lib.get("brass").r_surface == doctest::Approx(7e-3));
    CHECK(lib.get("brass").eps_r == 0.0);

    CHECK_THROWS_AS(sc::MaterialLibrary::from_text(
                        "badmetal metal 2.0 - 1 7e-3 ref\n", "mem"),
                    sc::ParseError);
    CHECK_THROWS_AS(sc::MaterialLibrary::from_text(
                        "baddiel dielectric 2.0 1e-8 1 7e-3 ref\n", "mem"),
                    sc::ParseError);
    try {
        sc::MaterialLibrary::from_text("x dielectric -1 0 1 - ref\n", "mem");
        CHECK(false);
    } catch (const sc::ParseError& e) {
        CHECK(std::string(e.what()).find("mem:1") != std::string::npos);
    }
}

TEST_CASE("dielectrics must have eps_r >= 1 and nonnegative loss") {
    sc::Material m = sc::builtin_material("diamond");
    m.eps_r = 0.5;
    CHECK_THROWS_AS(m.validate(), sc::DomainError);
    m = sc::builtin_material("diamond");
    m.tan_delta = -1e-9;
    CHECK_THROWS_AS(m.validate(), sc::DomainError);
}
