#ifndef SKEWPAIR_SPECIAL_FUNCTIONS_HPP
#define SKEWPAIR_SPECIAL_FUNCTIONS_HPP

#include <cmath>

// Gaussian kernels and scaled error functions used by the closed-form laws.
// All tail quantities are routed through erfcx-style scaling so that products
// like exp(a) * Phi(-z) never overflow for large a, z.

namespace skewpair {

inline constexpr double kSqrt2Pi = 2.5066282746310005024;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;
inline constexpr double kSqrt2 = 1.4142135623730950488;

/// Standard normal pdf.
inline double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// Standard normal cdf Phi(x).
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

/// Upper tail Phi(-x) = P(N > x).
inline double normal_tail(double x) { return 0.5 * std::erfc(x / kSqrt2); }

/// Scaled complementary error function erfcx(x) = exp(x^2) erfc(x), x >= 0.
/// Direct product is exact until erfc underflows (~x = 26.5); beyond that the
/// asymptotic series is accurate to ~1e-13.
inline double erfcx_pos(double x) {
    if (x < 26.0) return std::exp(x * x) * std::erfc(x);
    const double ix2 = 1.0 / (x * x);
    // erfc(x) ~ exp(-x^2)/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6) + 105/(16 x^8))
    double series = 1.0 + ix2 * (-0.5 + ix2 * (0.75 + ix2 * (-1.875 + ix2 * 6.5625)));
    return series / (x * 1.7724538509055160273);
}

/// exp(a) * Phi(-z), stable for large positive a and z.
inline double exp_times_normal_tail(double a, double z) {
    if (z <= 0.0) return std::exp(a) * normal_cdf(-z);
    // exp(a) * erfc(z/sqrt(2))/2 = exp(a - z^2/2) * erfcx(z/sqrt(2)) / 2
    return 0.5 * std::exp(a - 0.5 * z * z) * erfcx_pos(z / kSqrt2);
}

/// Gaussian transition kernel with variance t: exp(-x^2/(2t)) / sqrt(2 pi t).
inline double gauss_kernel(double t, double x) {
    return kInvSqrt2Pi / std::sqrt(t) * std::exp(-0.5 * x * x / t);
}

}  // namespace skewpair

#endif
