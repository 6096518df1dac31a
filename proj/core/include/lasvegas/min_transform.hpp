#pragma once

#include <optional>
#include <vector>

#include "lasvegas/distribution.hpp"

namespace lasvegas {

/// Distribution of the minimum of n independent draws from `base`: the
/// runtime of n parallel walks where the first finisher wins.
///   cdf_min(t) = 1 - (1 - F(t))^n
///   pdf_min(t) = n f(t) (1 - F(t))^(n-1)
struct MinTransform {
    RuntimeDistribution base;
    int n = 1;
};

double pdf_min(const MinTransform& mt, double t);
double cdf_min(const MinTransform& mt, double t);

/// E[min of n draws]. Exponential has the closed form x0 + 1/(n lambda);
/// n = 1 reduces to expectation(); the other families integrate the
/// survival form x0 + int (1-F)^n dt numerically.
double min_expectation(const RuntimeDistribution& base, int n);

/// The numeric route on its own, for any family (cross-checks the closed
/// forms). Throws quadrature_error with the achieved bound when the
/// tolerance cannot be met.
double min_expectation_quadrature(const RuntimeDistribution& base, int n,
                                  double rel_tol = 1e-10);

/// Panel breakpoints spanning the support of the n-walk minimum: a
/// quantile ladder of `base` truncated where (1-F)^n is negligible.
/// These are the panels min_expectation_quadrature integrates over.
std::vector<double> support_panels(const RuntimeDistribution& base, int n);

struct SpeedupPoint {
    int cores;
    double speedup;
};

/// Predicted speedup curve G(n) = E[Y] / E[Z(n)] over a core-count list,
/// with the n -> infinity asymptote when it exists and the tangent
/// coefficient at the origin for the exponential family.
struct SpeedupCurve {
    std::vector<SpeedupPoint> points;
    std::optional<double> limit;
    std::optional<double> origin_slope;
};

/// cores must be nonempty, positive and strictly increasing. The limit
/// field is populated for the exponential family only (finite for x0 > 0);
/// callers wanting the numeric limit of the other families ask
/// speedup_limit() explicitly.
SpeedupCurve speedup_curve(const RuntimeDistribution& base, const std::vector<int>& cores);

/// Asymptotic speedup: E[Y]/x0 for x0 > 0 (equals 1 + 1/(x0 lambda) for
/// the exponential), unbounded (nullopt) for x0 = 0.
std::optional<double> speedup_limit(const RuntimeDistribution& base);

}  // namespace lasvegas
