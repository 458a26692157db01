#include "gpc/gaussian.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "gpc/errors.hpp"
#include "gpc/quadrature.hpp"

namespace gpc {

double std_normal_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_cdf(double x) {
    if (x < -38.5) return 0.0;
    const double v = 0.5 * std::erfc(-x / kSqrt2);
    return v < DBL_MIN ? 0.0 : v;
}

double cdf_product_integral(double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    return sigma / kSqrtPi;
}

double cdf_shift_l1(double d, double d2, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    return std::abs(d - d2);
}

double cdf_diff_product_integral(double a, double b1, double b2, double b3) {
    if (a == 0.0) throw InvalidArgument("cdf_diff_product_integral: a must be nonzero");
    const auto antiderivative = [](double v) { return v * std_normal_cdf(v) + std_normal_pdf(v); };
    const double upper = (b1 - b2) / kSqrt2;
    const double lower = (b1 - b3) / kSqrt2;
    return -kSqrt2 / std::abs(a) * (antiderivative(upper) - antiderivative(lower));
}

double normal_raw_moment(int n, double a, double sigma, int max_order) {
    if (n < 0) throw InvalidArgument("moment order must be nonnegative");
    if (n > max_order) {
        throw OrderTooLarge("moment order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_order));
    }
    // Every term has sign sgn(a)^n, so no cancellation occurs.
    CompensatedSum sum;
    double binom = 1.0;         // C(n, k)
    double double_fact = 1.0;   // (k-1)!!
    double sigma_pow = 1.0;     // σ^k
    for (int k = 0; k <= n; k += 2) {
        sum.add(binom * std::pow(a, n - k) * sigma_pow * double_fact);
        if (k + 2 > n) break;
        binom = binom * (n - k) / (k + 1) * (n - k - 1) / (k + 2);
        double_fact *= (k + 1);
        sigma_pow *= sigma * sigma;
    }
    return sum.value();
}

}  // namespace gpc
