#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lasvegas/distribution.hpp"
#include "lasvegas/empirical.hpp"

namespace lasvegas {

enum class Verdict { accepted, rejected };

/// Result of a Kolmogorov–Smirnov goodness-of-fit test of one
/// distribution against one sample.
struct FitReport {
    std::string sample_label;
    RuntimeDistribution dist;
    double ks_statistic = 0.0;
    double p_value = 0.0;
    double threshold = 0.05;
    Verdict verdict = Verdict::rejected;
    std::size_t sample_size = 0;
    // The classical KS p-value assumes fixed parameters; when the tested
    // distribution was estimated from this very sample, that bias is
    // knowingly ignored and flagged here.
    bool params_estimated_from_sample = false;
    // Gap left below the observed minimum by the lognormal shift rule
    // (keeps log(v - x0) finite); zero for the other estimators.
    double x0_offset = 0.0;
};

/// x0 = min(sample), lambda = 1/(mean - x0). A minimum below 1% of the
/// mean snaps x0 to zero (the shift is then negligible and the plain
/// exponential is used). Needs >= 2 observations, not all equal.
RuntimeDistribution estimate_shifted_exponential(const EmpiricalSample& sample);

/// x0 = min(sample) minus a small offset (0.5 for iteration counts,
/// a relative 1e-6 for seconds) so the smallest log term stays finite;
/// mu, sigma are the ML estimates of log(v - x0). Needs >= 3 distinct
/// observations.
RuntimeDistribution estimate_shifted_lognormal(const EmpiricalSample& sample);

/// Moment fit of the cut gaussian: x0 = 0, mu = mean, sigma = ML sd.
RuntimeDistribution estimate_shifted_gaussian(const EmpiricalSample& sample);

/// Two-sided KS statistic D over the stepped empirical CDF plus the
/// asymptotic Kolmogorov p-value with the Stephens small-sample factor.
/// Requires sample size >= 10.
FitReport ks_test(const EmpiricalSample& sample, const RuntimeDistribution& dist,
                  double threshold = 0.05);

/// P(D > d) from the asymptotic Kolmogorov series
/// Q(l) = 2 sum_k (-1)^(k-1) exp(-2 k^2 l^2), l = (sqrt(N)+0.12+0.11/sqrt(N)) d.
double kolmogorov_p_value(double d, std::size_t n);

struct FitOutcome {
    Family family;
    std::optional<FitReport> report;  // empty when estimation/testing failed
    std::string error;                // the failure message, if any
};

/// Estimate + test each family in turn; failures are embedded, never
/// abort the batch. Successful reports come first, ordered by descending
/// p-value.
std::vector<FitOutcome> fit_all(const EmpiricalSample& sample,
                                const std::vector<Family>& families,
                                double threshold = 0.05);

}  // namespace lasvegas
