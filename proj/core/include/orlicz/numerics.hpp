#pragma once

#include <functional>
#include <string>
#include <vector>

namespace orlicz {

/// n points log-spaced in [lo, hi], lo > 0, endpoints included.
std::vector<double> logspace(double lo, double hi, int n);

/// n points linearly spaced in [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, int n);

/// Root of the increasing map g on [lo, hi] with g(lo) <= target <= g(hi).
/// Bisects until the bracket is below atol (absolute on the argument) or the
/// iteration cap is hit; returns the lower bracket end.
double bisect_increasing(const std::function<double(double)>& g, double target,
                         double lo, double hi, double atol = 1e-12,
                         int max_iter = 200);

/// Grows hi geometrically from [lo, hi] until g(hi) >= target.
/// Throws EvaluationError when hi exceeds guard first.
double grow_bracket(const std::function<double(double)>& g, double target,
                    double hi, double guard);

/// Adaptive Simpson quadrature of f on [a, b] to relative tolerance rtol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rtol = 1e-12);

/// Direction of a sampled sequence: "increasing", "decreasing" or "flat",
/// judged by the sign pattern of consecutive differences with relative
/// tolerance tol.
std::string trend_direction(const std::vector<double>& values,
                            double tol = 1e-9);

}  // namespace orlicz
