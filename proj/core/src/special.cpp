#include "lasvegas/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lasvegas::special {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

// Acklam's rational approximation to the inverse normal CDF
// (~1.15e-9 relative), used as the seed for a Halley refinement.
double probit_estimate(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double p_low = 0.02425;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_pdf(double z) {
    return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / kSqrt2);
}

double normal_sf(double z) {
    return 0.5 * std::erfc(z / kSqrt2);
}

double probit(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("probit: argument must lie in (0, 1)");
    }
    double z = probit_estimate(p);
    // one Halley step against the erfc-based CDF
    double e = normal_cdf(z) - p;
    double u = e / normal_pdf(z);
    z -= u / (1.0 + 0.5 * z * u);
    return z;
}

double uniform_open(std::mt19937_64& rng) {
    const double scale = 0x1.0p-53;  // 2^-53
    return (static_cast<double>(rng() >> 11) + 0.5) * scale;
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::domain_error("uniform_index: bound must be positive");
    }
    unsigned __int128 wide = static_cast<unsigned __int128>(rng()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
}

}  // namespace lasvegas::special
