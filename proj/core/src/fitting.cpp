#include "lasvegas/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lasvegas/errors.hpp"

namespace lasvegas {

namespace {

// Minimum below this fraction of the mean is treated as zero shift.
constexpr double kZeroShiftFraction = 0.01;

double mle_sd(const std::vector<double>& xs, double mean) {
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size()));
}

}  // namespace

RuntimeDistribution estimate_shifted_exponential(const EmpiricalSample& sample) {
    if (sample.size() < 2) {
        throw degenerate_sample("shifted exponential estimate needs >= 2 observations");
    }
    double mean = sample.mean();
    double x0 = sample.min();
    if (x0 < kZeroShiftFraction * mean) x0 = 0.0;
    if (!(mean > sample.min())) {
        throw degenerate_sample("shifted exponential estimate: mean equals minimum, "
                                "rate is undefined");
    }
    return RuntimeDistribution::shifted_exponential(x0, 1.0 / (mean - x0));
}

RuntimeDistribution estimate_shifted_lognormal(const EmpiricalSample& sample) {
    if (sample.size() < 3) {
        throw degenerate_sample("shifted lognormal estimate needs >= 3 observations");
    }
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < sample.size(); ++i) {
        if (sample.values()[i] != sample.values()[i - 1]) ++distinct;
    }
    if (distinct < 3) {
        throw degenerate_sample("shifted lognormal estimate needs >= 3 distinct values");
    }

    double offset = sample.unit() == Unit::iterations ? 0.5 : sample.min() * 1e-6;
    double x0 = sample.min() - offset;
    if (x0 < 0.0) x0 = 0.0;

    std::vector<double> logs;
    logs.reserve(sample.size());
    for (double v : sample.values()) logs.push_back(std::log(v - x0));
    double mu = std::accumulate(logs.begin(), logs.end(), 0.0) /
                static_cast<double>(logs.size());
    double sigma = mle_sd(logs, mu);
    if (!(sigma > 0.0)) {
        throw degenerate_sample("shifted lognormal estimate: zero log-spread");
    }
    return RuntimeDistribution::shifted_lognormal(x0, mu, sigma);
}

RuntimeDistribution estimate_shifted_gaussian(const EmpiricalSample& sample) {
    if (sample.size() < 2) {
        throw degenerate_sample("gaussian estimate needs >= 2 observations");
    }
    double mean = sample.mean();
    double sd = mle_sd(sample.values(), mean);
    if (!(sd > 0.0)) {
        throw degenerate_sample("gaussian estimate: zero spread");
    }
    return RuntimeDistribution::shifted_gaussian(0.0, mean, sd);
}

double kolmogorov_p_value(double d, std::size_t n) {
    if (d <= 0.0) return 1.0;
    if (d >= 1.0) return 0.0;
    double sqrt_n = std::sqrt(static_cast<double>(n));
    double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    if (lambda < 0.04) return 1.0;  // series converges to 1 long before this

    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 1000; ++k) {
        double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

FitReport ks_test(const EmpiricalSample& sample, const RuntimeDistribution& dist,
                  double threshold) {
    validate(dist);
    if (sample.size() < 10) {
        throw undersized_sample("ks_test needs >= 10 observations for a meaningful p-value");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw invalid_parameters("ks_test: threshold must lie in (0, 1)");
    }

    const auto& v = sample.values();
    const double n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double f = cdf(dist, v[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }

    FitReport report;
    report.sample_label = sample.label();
    report.dist = dist;
    report.ks_statistic = d;
    report.p_value = kolmogorov_p_value(d, sample.size());
    report.threshold = threshold;
    report.verdict = report.p_value >= threshold ? Verdict::accepted : Verdict::rejected;
    report.sample_size = sample.size();
    return report;
}

std::vector<FitOutcome> fit_all(const EmpiricalSample& sample,
                                const std::vector<Family>& families,
                                double threshold) {
    if (families.empty()) {
        throw invalid_parameters("fit_all: family list is empty");
    }

    std::vector<FitOutcome> outcomes;
    for (Family family : families) {
        FitOutcome outcome;
        outcome.family = family;
        try {
            RuntimeDistribution dist;
            switch (family) {
                case Family::ShiftedExponential:
                    dist = estimate_shifted_exponential(sample);
                    break;
                case Family::ShiftedLognormal:
                    dist = estimate_shifted_lognormal(sample);
                    break;
                case Family::ShiftedGaussian:
                    dist = estimate_shifted_gaussian(sample);
                    break;
            }
            FitReport report = ks_test(sample, dist, threshold);
            report.params_estimated_from_sample = true;
            if (family == Family::ShiftedLognormal) {
                report.x0_offset = sample.min() - dist.x0;
            }
            outcome.report = std::move(report);
        } catch (const error& e) {
            outcome.error = e.what();
        }
        outcomes.push_back(std::move(outcome));
    }

    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const FitOutcome& a, const FitOutcome& b) {
                         if (a.report.has_value() != b.report.has_value()) {
                             return a.report.has_value();
                         }
                         if (!a.report) return false;
                         return a.report->p_value > b.report->p_value;
                     });
    return outcomes;
}

}  // namespace lasvegas
