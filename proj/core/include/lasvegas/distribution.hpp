#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace lasvegas {

enum class Family { ShiftedExponential, ShiftedLognormal, ShiftedGaussian };

const char* family_name(Family f);

/// Parametric model of a sequential runtime distribution. Density is zero
/// below the shift x0.
///
///   ShiftedExponential:  Y = x0 + Exp(lambda)
///   ShiftedLognormal:    Y = x0 + exp(N(mu, sigma))
///   ShiftedGaussian:     Y = x0 + (W | W >= 0),  W ~ N(mu, sigma)
///                        (gaussian cut on the negative axis and renormalized)
struct RuntimeDistribution {
    Family family = Family::ShiftedExponential;
    double x0 = 0.0;
    double lambda = 0.0;  // exponential rate
    double mu = 0.0;      // log-mean (lognormal) / location (gaussian)
    double sigma = 0.0;   // log-sd (lognormal) / sd (gaussian)

    static RuntimeDistribution shifted_exponential(double x0, double lambda);
    static RuntimeDistribution shifted_lognormal(double x0, double mu, double sigma);
    static RuntimeDistribution shifted_gaussian(double x0, double mu, double sigma);
};

/// Throws invalid_parameters unless the family's parameter invariants hold
/// (lambda > 0, sigma > 0 where applicable, x0 >= 0).
void validate(const RuntimeDistribution& dist);

double pdf(const RuntimeDistribution& dist, double t);
double cdf(const RuntimeDistribution& dist, double t);

/// 1 - cdf(t), computed without cancellation in the upper tail.
double survival(const RuntimeDistribution& dist, double t);

/// Inverse CDF on (0, 1).
double quantile(const RuntimeDistribution& dist, double p);

/// quantile(1 - q) evaluated stably for tiny q (deep upper tail).
double upper_quantile(const RuntimeDistribution& dist, double q);

/// Closed-form mean: x0 + 1/lambda, x0 + exp(mu + sigma^2/2), or the
/// truncated-normal mean shifted by x0.
double expectation(const RuntimeDistribution& dist);

/// Inverse-CDF sampling; deterministic for a given seeded engine, every
/// sample >= x0. count must be positive.
std::vector<double> sample(const RuntimeDistribution& dist, std::mt19937_64& rng,
                           std::size_t count);

}  // namespace lasvegas
