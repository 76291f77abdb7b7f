#ifndef SKEWPAIR_SCALE_HPP
#define SKEWPAIR_SCALE_HPP

#include <cmath>

#include "skewpair/errors.hpp"

namespace skewpair {

/// Scale transform removing drift and local time from the skew bang-bang
/// process: Z = p(Y) solves dZ = s(Z) dW with piecewise-linear dispersion s
/// bounded below by min(alpha, 1-alpha). q is the inverse of p.
struct ScaleTransform {
    double lambda;
    double alpha;

    double p(double y) const {
        if (y > 0.0) return (1.0 - alpha) * std::expm1(2.0 * lambda * y) / (2.0 * lambda);
        if (y < 0.0) return -alpha * std::expm1(-2.0 * lambda * y) / (2.0 * lambda);
        return 0.0;
    }

    /// Left-continuous derivative of p; p'(0) = alpha.
    double p_prime(double y) const {
        return y > 0.0 ? (1.0 - alpha) * std::exp(2.0 * lambda * y)
                       : alpha * std::exp(-2.0 * lambda * y);
    }

    double q(double z) const {
        if (z > 0.0) return std::log1p(2.0 * lambda * z / (1.0 - alpha)) / (2.0 * lambda);
        if (z < 0.0) return -std::log1p(-2.0 * lambda * z / alpha) / (2.0 * lambda);
        return 0.0;
    }

    double q_prime(double z) const {
        return z > 0.0 ? 1.0 / (1.0 - alpha + 2.0 * lambda * z)
                       : 1.0 / (alpha - 2.0 * lambda * z);
    }

    /// Transformed dispersion s(z) = 1/q'(z) = p'(q(z)).
    double s(double z) const {
        return z > 0.0 ? 1.0 - alpha + 2.0 * lambda * z : alpha - 2.0 * lambda * z;
    }
};

/// Builds the transform; only interior skewness admits it (the boundary cases
/// are handled by the reflection scheme instead).
inline ScaleTransform make_scale(double lambda, double alpha) {
    if (!(lambda > 0.0)) throw DomainError("scale transform requires lambda > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("scale transform requires alpha in (0,1); use the reflected scheme at the boundary");
    return ScaleTransform{lambda, alpha};
}

}  // namespace skewpair

#endif
