#include "doctest.h"

#include <cmath>

#include "spincavity/analytic_modes.hpp"
#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace sc = spincavity;
namespace k = spincavity::constants;

TEST_CASE("tabulated Bessel roots are actual zeros") {
    CHECK(std::abs(std::cyl_bessel_j(0, sc::bessel_j_root(0, 1))) < 1e-10);
    CHECK(std::abs(std::cyl_bessel_j(1, sc::bessel_j_root(1, 1))) < 1e-10);
    // roots of J0' coincide with roots of J1
    CHECK(std::abs(std::cyl_bessel_j(1, sc::bessel_j_prime_root(0, 1))) <
          1e-10);
    CHECK(sc::bessel_j_prime_root(0, 1) ==
          doctest::Approx(3.8317059702075125).epsilon(1e-10));
    CHECK(sc::bessel_j_root(0, 1) ==
          doctest::Approx(2.404825557695773).epsilon(1e-10));
}

TEST_CASE("lowest azimuthally symmetric TE mode of the reference cylinder") {
    const double f = sc::analytic_cylindrical_mode(
        0.07, 0.10, sc::CylindricalFamily::te, 0, 1, 1);
    CHECK(f == doctest::Approx(3011350489.83).epsilon(1e-9));
}

TEST_CASE("cylindrical closed forms reduce to their limiting cases") {
    // a very tall cavity leaves only the radial cutoff
    const double radius = 0.05;
    const double f_tall = sc::analytic_cylindrical_mode(
        radius, 1e6, sc::CylindricalFamily::te, 0, 1, 1);
    const double cutoff =
        k::speed_of_light / k::two_pi * sc::bessel_j_prime_root(0, 1) / radius;
    CHECK(f_tall == doctest::Approx(cutoff).epsilon(1e-9));

    // the lowest TM mode does not depend on height at all
    const double f1 = sc::analytic_cylindrical_mode(
        radius, 0.02, sc::CylindricalFamily::tm, 0, 1, 0);
    const double f2 = sc::analytic_cylindrical_mode(
        radius, 0.2, sc::CylindricalFamily::tm, 0, 1, 0);
    const double tm010 =
        k::speed_of_light / k::two_pi * sc::bessel_j_root(0, 1) / radius;
    CHECK(f1 == doctest::Approx(tm010).epsilon(1e-12));
    CHECK(f2 == doctest::Approx(tm010).epsilon(1e-12));
}

TEST_CASE("rectangular closed form and index validation") {
    const double a = 0.10, b = 0.08, d = 0.06;
    const double f = sc::analytic_rectangular_mode(a, b, d, 1, 0, 1);
    const double expect =
        0.5 * k::speed_of_light *
        std::sqrt(1.0 / (a * a) + 1.0 / (d * d));
    CHECK(f == doctest::Approx(expect).epsilon(1e-12));

    CHECK_THROWS_AS((void)sc::analytic_rectangular_mode(a, b, d, 0, 0, 1),
                    sc::DomainError);
    CHECK_THROWS_AS((void)sc::analytic_rectangular_mode(-a, b, d, 1, 1, 0),
                    sc::DomainError);
    CHECK_THROWS_AS((void)sc::analytic_cylindrical_mode(
                        0.05, 0.1, sc::CylindricalFamily::te, 0, 1, 0),
                    sc::DomainError);
    CHECK_THROWS_AS((void)sc::analytic_cylindrical_mode(
                        0.05, -0.1, sc::CylindricalFamily::tm, 0, 1, 0),
                    sc::DomainError);
    CHECK_THROWS_AS((void)sc::bessel_j_root(0, 9), sc::DomainError);
}
