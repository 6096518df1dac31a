#include "lasvegas/min_transform.hpp"

#include <algorithm>
#include <cmath>

#include "lasvegas/errors.hpp"
#include "lasvegas/quadrature.hpp"

namespace lasvegas {

namespace {

void validate_n(int n) {
    if (n < 1) throw invalid_parameters("min transform: n must be >= 1");
}

}  // namespace

double pdf_min(const MinTransform& mt, double t) {
    validate_n(mt.n);
    if (t < mt.base.x0) return 0.0;
    double s = survival(mt.base, t);
    return static_cast<double>(mt.n) * pdf(mt.base, t) *
           std::pow(s, static_cast<double>(mt.n - 1));
}

double cdf_min(const MinTransform& mt, double t) {
    validate_n(mt.n);
    if (t <= mt.base.x0) return 0.0;
    return 1.0 - std::pow(survival(mt.base, t), static_cast<double>(mt.n));
}

std::vector<double> support_panels(const RuntimeDistribution& base, int n) {
    validate(base);
    validate_n(n);

    // Tail cutoff T with (1-F(T))^n below 1e-18; the survival-form
    // remainder past T is bounded by S(T)^(n-1) E[(Y-T)+] and is far
    // below the integration tolerance.
    double delta = std::pow(1e-18, 1.0 / n);
    double cutoff = upper_quantile(base, delta);

    static const double lower_ps[] = {1e-12, 1e-9, 1e-6, 1e-4, 1e-3, 0.01,
                                      0.05,  0.1,  0.25, 0.5,  0.75, 0.9};
    static const double upper_qs[] = {0.05, 0.01, 1e-3, 1e-4, 1e-6, 1e-9, 1e-12, 1e-15};

    std::vector<double> pts;
    pts.push_back(base.x0);
    for (double p : lower_ps) pts.push_back(quantile(base, p));
    for (double q : upper_qs) {
        if (q > delta) pts.push_back(upper_quantile(base, q));
    }
    pts.push_back(cutoff);

    std::sort(pts.begin(), pts.end());
    std::vector<double> panels;
    for (double t : pts) {
        if (t > cutoff) break;
        if (panels.empty() || t > panels.back()) panels.push_back(t);
    }
    if (panels.size() < 2) panels = {base.x0, cutoff};
    return panels;
}

double min_expectation_quadrature(const RuntimeDistribution& base, int n, double rel_tol) {
    validate(base);
    validate_n(n);
    auto integrand = [&base, n](double t) {
        return std::pow(survival(base, t), static_cast<double>(n));
    };
    double tail = integrate_or_throw(integrand, support_panels(base, n), rel_tol,
                                     "min_expectation");
    return base.x0 + tail;
}

double min_expectation(const RuntimeDistribution& base, int n) {
    validate(base);
    validate_n(n);
    if (base.family == Family::ShiftedExponential) {
        return base.x0 + 1.0 / (static_cast<double>(n) * base.lambda);
    }
    if (n == 1) return expectation(base);
    return min_expectation_quadrature(base, n);
}

SpeedupCurve speedup_curve(const RuntimeDistribution& base, const std::vector<int>& cores) {
    validate(base);
    if (cores.empty()) throw invalid_parameters("speedup_curve: core list is empty");
    for (std::size_t i = 0; i < cores.size(); ++i) {
        if (cores[i] < 1) throw invalid_parameters("speedup_curve: core counts must be positive");
        if (i > 0 && cores[i] <= cores[i - 1]) {
            throw invalid_parameters("speedup_curve: core counts must be strictly increasing");
        }
    }

    SpeedupCurve curve;
    if (base.family == Family::ShiftedExponential) {
        // G(n) = (x0 + 1/lambda) / (x0 + 1/(n lambda)) = n (x0 l + 1) / (n x0 l + 1);
        // this form is exactly n when x0 = 0.
        double xl = base.x0 * base.lambda;
        for (int n : cores) {
            curve.points.push_back({n, n * (xl + 1.0) / (n * xl + 1.0)});
        }
        if (base.x0 > 0.0) curve.limit = 1.0 + 1.0 / xl;
        curve.origin_slope = xl + 1.0;
    } else {
        double mean = expectation(base);
        for (int n : cores) {
            curve.points.push_back({n, mean / min_expectation(base, n)});
        }
    }
    return curve;
}

std::optional<double> speedup_limit(const RuntimeDistribution& base) {
    validate(base);
    if (base.x0 <= 0.0) return std::nullopt;
    if (base.family == Family::ShiftedExponential) {
        return 1.0 + 1.0 / (base.x0 * base.lambda);
    }
    return expectation(base) / base.x0;
}

}  // namespace lasvegas
