#include "spincavity/analytic_modes.hpp"

#include <cmath>
#include <sstream>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

// Roots of J_m(x) = 0 and J_m'(x) = 0, m = 0..5, first five roots each
// (Abramowitz & Stegun tables 9.5).  Note the m = 0 derivative roots coincide
// with the J_1 roots since J_0' = -J_1.
constexpr double j_roots[6][5] = {
    {2.4048255577, 5.5200781103, 8.6537279129, 11.7915344391, 14.9309177086},
    {3.8317059702, 7.0155866698, 10.1734681351, 13.3236919363, 16.4706300509},
    {5.1356223018, 8.4172441404, 11.6198411721, 14.7959517824, 17.9598194950},
    {6.3801618959, 9.7610231300, 13.0152007217, 16.2234661603, 19.4094152264},
    {7.5883424345, 11.0647094885, 14.3725366716, 17.6159660498, 20.8269329570},
    {8.7714838160, 12.3386041975, 15.7001740797, 18.9801338751, 22.2177998966},
};

constexpr double j_prime_roots[6][5] = {
    {3.8317059702, 7.0155866698, 10.1734681351, 13.3236919363, 16.4706300509},
    {1.8411837813, 5.3314427735, 8.5363163663, 11.7060049026, 14.8635886339},
    {3.0542369282, 6.7061331942, 9.9694678231, 13.1703708560, 16.3475223183},
    {4.2011889412, 8.0152365984, 11.3459243107, 14.5858482862, 17.7887478661},
    {5.3175531260, 9.2823962852, 12.6819084427, 15.9641070377, 19.1960288000},
    {6.4156163757, 10.5198698706, 13.9871886301, 17.3128424878, 20.5755145214},
};

void check_bessel_indices(int m, int n) {
    if (m < 0 || m > 5 || n < 1 || n > 5) {
        std::ostringstream os;
        os << "Bessel root table covers 0 <= m <= 5, 1 <= n <= 5; got m=" << m
           << " n=" << n;
        throw DomainError(os.str());
    }
}

} // namespace

double bessel_j_root(int m, int n) {
    check_bessel_indices(m, n);
    return j_roots[m][n - 1];
}

double bessel_j_prime_root(int m, int n) {
    check_bessel_indices(m, n);
    return j_prime_roots[m][n - 1];
}

double analytic_rectangular_mode(double a, double b, double d, int m, int n,
                                 int p) {
    if (!(a > 0.0 && b > 0.0 && d > 0.0))
        throw DomainError("rectangular dimensions must be positive");
    if (m < 0 || n < 0 || p < 0)
        throw DomainError("mode indices must be non-negative");
    const int zeros = (m == 0) + (n == 0) + (p == 0);
    if (zeros > 1)
        throw DomainError("invalid index triple: at most one index may be zero");
    const double fm = m / a, fn = n / b, fp = p / d;
    return 0.5 * constants::speed_of_light *
           std::sqrt(fm * fm + fn * fn + fp * fp);
}

double analytic_cylindrical_mode(double radius, double height,
                                 CylindricalFamily family, int m, int n,
                                 int p) {
    if (!(radius > 0.0 && height > 0.0))
        throw DomainError("cylinder dimensions must be positive");
    if (family == CylindricalFamily::te && p < 1)
        throw DomainError("TE cylindrical modes require p >= 1");
    if (family == CylindricalFamily::tm && p < 0)
        throw DomainError("TM cylindrical modes require p >= 0");
    const double chi = (family == CylindricalFamily::te)
                           ? bessel_j_prime_root(m, n)
                           : bessel_j_root(m, n);
    const double kr = chi / radius;
    const double kz = p * constants::pi / height;
    return constants::speed_of_light / constants::two_pi *
           std::sqrt(kr * kr + kz * kz);
}

} // namespace spincavity
