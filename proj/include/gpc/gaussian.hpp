#pragma once

#include <functional>

namespace gpc {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

/// φ(x).
double std_normal_pdf(double x);

/// Φ(x) through erfc; absolute error well below 1e-12. Returns exactly 0 for
/// x < -38.5 and exactly 1 once the complement drops under half an ulp.
double std_normal_cdf(double x);

/// ∫ Φ((b-t)/σ) Φ((t-b)/σ) dt over the real line = σ/√π for every real b.
double cdf_product_integral(double sigma);

/// ∫ |Φ((t-d2)/σ) - Φ((t-d)/σ)| dt over the real line = |d - d2|.
double cdf_shift_l1(double d, double d2, double sigma);

/// Closed form of ∫ Φ(at + b1)(Φ(at + b2) - Φ(at + b3)) dt over the real line:
///   (-√2/|a|) [vΦ(v) + φ(v)] from v = (b1-b3)/√2 to v = (b1-b2)/√2.
/// Throws InvalidArgument when a == 0.
double cdf_diff_product_integral(double a, double b1, double b2, double b3);

inline constexpr int kMaxMomentOrder = 64;

/// E[X^n] for X ~ N(a, σ²): Σ_{k even} C(n,k) a^(n-k) σ^k (k-1)!!, summed with
/// compensation. Throws OrderTooLarge when n > max_order.
double normal_raw_moment(int n, double a, double sigma, int max_order = kMaxMomentOrder);

}  // namespace gpc
