#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lasvegas {

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

/// Adaptive Gauss–Kronrod (7–15) integration of f over [a, b].
/// Bisects the segment with the largest error estimate until the summed
/// error bound drops below max(abs_tol, rel_tol * |integral|) or the
/// segment budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-10,
                                    double abs_tol = 0.0,
                                    std::size_t max_segments = 2000);

/// Same, but starting from a pre-broken panel list (sorted breakpoints).
/// Useful when the integrand's mass location is known, e.g. from
/// distribution quantiles.
QuadratureResult integrate_adaptive_panels(const std::function<double(double)>& f,
                                           const std::vector<double>& breakpoints,
                                           double rel_tol = 1e-10,
                                           double abs_tol = 0.0,
                                           std::size_t max_segments = 2000);

/// integrate_adaptive_panels that throws quadrature_error (carrying the
/// achieved error bound) when the tolerance was not reached.
double integrate_or_throw(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints,
                          double rel_tol,
                          const char* what);

}  // namespace lasvegas
