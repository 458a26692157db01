#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gpc {

struct Interval {
    double lo;
    double hi;
};

/// Tolerances for every "integral over the real line" in the library. Infinite
/// domains are truncated to [lowest coordinate - padding·σ, highest + padding·σ].
struct QuadratureSpec {
    double relative_tolerance = 1e-9;
    double support_padding = 10.0;
    double absolute_floor = 1e-13;
    int max_panels = 20000;

    /// Throws InvalidArgument unless relative_tolerance > 0 and support_padding >= 6.
    void validate() const;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int panels;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + correction_; }

private:
    double sum_ = 0.0;
    double correction_ = 0.0;
};

/// Globally adaptive 21-point Gauss–Kronrod integration of f over `support`.
/// The panel with the largest error estimate is bisected until the summed error
/// estimate is below max(relative_tolerance·|I|, absolute_floor). Optional
/// breakpoints inside the support seed the initial panels. Deterministic.
/// Throws NonConvergence when max_panels is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, Interval support,
                           const QuadratureSpec& spec, std::span<const double> breakpoints = {});

/// ∫ |f| over `support` (the integrand is wrapped in an absolute value).
double integrate_l1(const std::function<double(double)>& f, Interval support,
                    const QuadratureSpec& spec = {}, std::span<const double> breakpoints = {});

}  // namespace gpc
