#include "lasvegas/distribution.hpp"

#include <cmath>
#include <string>

#include "lasvegas/errors.hpp"
#include "lasvegas/special.hpp"

namespace lasvegas {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt2Pi = 2.5066282746310005024;

// Mass of the gaussian removed by the cut on the negative axis.
double gaussian_cut_mass(const RuntimeDistribution& d) {
    return special::normal_cdf(-d.mu / d.sigma);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::ShiftedExponential: return "exponential";
        case Family::ShiftedLognormal: return "lognormal";
        case Family::ShiftedGaussian: return "gaussian";
    }
    return "?";
}

RuntimeDistribution RuntimeDistribution::shifted_exponential(double x0, double lambda) {
    RuntimeDistribution d;
    d.family = Family::ShiftedExponential;
    d.x0 = x0;
    d.lambda = lambda;
    validate(d);
    return d;
}

RuntimeDistribution RuntimeDistribution::shifted_lognormal(double x0, double mu, double sigma) {
    RuntimeDistribution d;
    d.family = Family::ShiftedLognormal;
    d.x0 = x0;
    d.mu = mu;
    d.sigma = sigma;
    validate(d);
    return d;
}

RuntimeDistribution RuntimeDistribution::shifted_gaussian(double x0, double mu, double sigma) {
    RuntimeDistribution d;
    d.family = Family::ShiftedGaussian;
    d.x0 = x0;
    d.mu = mu;
    d.sigma = sigma;
    validate(d);
    return d;
}

void validate(const RuntimeDistribution& d) {
    if (!std::isfinite(d.x0) || d.x0 < 0.0) {
        throw invalid_parameters("distribution: x0 must be finite and nonnegative");
    }
    switch (d.family) {
        case Family::ShiftedExponential:
            if (!(d.lambda > 0.0) || !std::isfinite(d.lambda)) {
                throw invalid_parameters("exponential: lambda must be positive");
            }
            break;
        case Family::ShiftedLognormal:
            if (!(d.sigma > 0.0) || !std::isfinite(d.sigma) || !std::isfinite(d.mu)) {
                throw invalid_parameters("lognormal: sigma must be positive, mu finite");
            }
            break;
        case Family::ShiftedGaussian:
            if (!(d.sigma > 0.0) || !std::isfinite(d.sigma) || !std::isfinite(d.mu)) {
                throw invalid_parameters("gaussian: sigma must be positive, mu finite");
            }
            if (gaussian_cut_mass(d) >= 1.0) {
                throw invalid_parameters("gaussian: cut removes essentially all mass (mu << 0)");
            }
            break;
    }
}

double pdf(const RuntimeDistribution& d, double t) {
    validate(d);
    if (t < d.x0) return 0.0;
    switch (d.family) {
        case Family::ShiftedExponential:
            return d.lambda * std::exp(-d.lambda * (t - d.x0));
        case Family::ShiftedLognormal: {
            if (t == d.x0) return 0.0;
            double w = std::log(t - d.x0) - d.mu;
            return std::exp(-w * w / (2.0 * d.sigma * d.sigma)) /
                   (kSqrt2Pi * (t - d.x0) * d.sigma);
        }
        case Family::ShiftedGaussian: {
            double z = (t - d.x0 - d.mu) / d.sigma;
            return special::normal_pdf(z) / (d.sigma * (1.0 - gaussian_cut_mass(d)));
        }
    }
    return 0.0;
}

double cdf(const RuntimeDistribution& d, double t) {
    validate(d);
    if (t <= d.x0) return 0.0;
    switch (d.family) {
        case Family::ShiftedExponential:
            return -std::expm1(-d.lambda * (t - d.x0));
        case Family::ShiftedLognormal:
            // 0.5 * erfc((mu - log(t - x0)) / (sqrt(2) sigma))
            return 0.5 * std::erfc((d.mu - std::log(t - d.x0)) / (kSqrt2 * d.sigma));
        case Family::ShiftedGaussian: {
            double p0 = gaussian_cut_mass(d);
            double z = (t - d.x0 - d.mu) / d.sigma;
            return (special::normal_cdf(z) - p0) / (1.0 - p0);
        }
    }
    return 0.0;
}

double survival(const RuntimeDistribution& d, double t) {
    validate(d);
    if (t <= d.x0) return 1.0;
    switch (d.family) {
        case Family::ShiftedExponential:
            return std::exp(-d.lambda * (t - d.x0));
        case Family::ShiftedLognormal:
            return 0.5 * std::erfc((std::log(t - d.x0) - d.mu) / (kSqrt2 * d.sigma));
        case Family::ShiftedGaussian: {
            double z = (t - d.x0 - d.mu) / d.sigma;
            return special::normal_sf(z) / (1.0 - gaussian_cut_mass(d));
        }
    }
    return 0.0;
}

double quantile(const RuntimeDistribution& d, double p) {
    validate(d);
    if (!(p > 0.0 && p < 1.0)) {
        throw invalid_parameters("quantile: p must lie in (0, 1)");
    }
    switch (d.family) {
        case Family::ShiftedExponential:
            return d.x0 - std::log1p(-p) / d.lambda;
        case Family::ShiftedLognormal:
            return d.x0 + std::exp(d.mu + d.sigma * special::probit(p));
        case Family::ShiftedGaussian: {
            double p0 = gaussian_cut_mass(d);
            return d.x0 + d.mu + d.sigma * special::probit(p0 + p * (1.0 - p0));
        }
    }
    return 0.0;
}

double upper_quantile(const RuntimeDistribution& d, double q) {
    validate(d);
    if (!(q > 0.0 && q < 1.0)) {
        throw invalid_parameters("upper_quantile: q must lie in (0, 1)");
    }
    switch (d.family) {
        case Family::ShiftedExponential:
            return d.x0 - std::log(q) / d.lambda;
        case Family::ShiftedLognormal:
            // survival q  <=>  z = -probit(q) in log space
            return d.x0 + std::exp(d.mu - d.sigma * special::probit(q));
        case Family::ShiftedGaussian: {
            double p0 = gaussian_cut_mass(d);
            return d.x0 + d.mu - d.sigma * special::probit(q * (1.0 - p0));
        }
    }
    return 0.0;
}

double expectation(const RuntimeDistribution& d) {
    validate(d);
    switch (d.family) {
        case Family::ShiftedExponential:
            return d.x0 + 1.0 / d.lambda;
        case Family::ShiftedLognormal:
            return d.x0 + std::exp(d.mu + 0.5 * d.sigma * d.sigma);
        case Family::ShiftedGaussian: {
            // mean of N(mu, sigma) conditioned on >= 0, shifted by x0
            double a = -d.mu / d.sigma;
            return d.x0 + d.mu + d.sigma * special::normal_pdf(a) / special::normal_sf(a);
        }
    }
    return 0.0;
}

std::vector<double> sample(const RuntimeDistribution& d, std::mt19937_64& rng,
                           std::size_t count) {
    validate(d);
    if (count == 0) {
        throw invalid_parameters("sample: count must be positive");
    }
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(quantile(d, special::uniform_open(rng)));
    }
    return out;
}

}  // namespace lasvegas
