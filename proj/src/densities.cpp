#include "skewpair/densities.hpp"

#include <cmath>
#include <limits>

#include "skewpair/quadrature.hpp"
#include "skewpair/special_functions.hpp"

namespace skewpair {

namespace {

inline double sgn_left(double x) { return x > 0.0 ? 1.0 : -1.0; }

inline void require_time(double t) {
    if (!(t > 0.0)) throw DomainError("density evaluation requires t > 0");
}

// lambda * integral_x^inf exp(-(u - lambda t)^2 / 2t) du / sqrt(2 pi t)
inline double drift_tail(double t, double lambda, double x) {
    return lambda * normal_tail((x - lambda * t) / std::sqrt(t));
}

}  // namespace

double skew_bm_density(double t, double y0, double xi, double alpha) {
    require_time(t);
    return gauss_kernel(t, xi - y0) +
           (2.0 * alpha - 1.0) * sgn_left(xi) * gauss_kernel(t, std::abs(y0) + std::abs(xi));
}

double joint_density(double t, double y0, double xi, double b, double alpha, double lambda) {
    require_time(t);
    if (!(b > 0.0)) throw DomainError("joint density requires local-time level b > 0");
    const double weight = xi > 0.0 ? 2.0 * alpha : 2.0 * (1.0 - alpha);
    const double m = std::abs(xi) + b + std::abs(y0);
    return weight * std::exp(-2.0 * lambda * std::abs(xi)) * m /
           (kSqrt2Pi * t * std::sqrt(t)) * std::exp(-0.5 * (m - lambda * t) * (m - lambda * t) / t);
}

double zero_localtime_density(double t, double y0, double xi, double lambda) {
    require_time(t);
    if (xi * y0 <= 0.0) return 0.0;  // includes y0 = 0: local time starts immediately
    const double a = std::abs(xi);
    const double c = std::abs(y0);
    return gauss_kernel(t, a - c + lambda * t) -
           std::exp(-2.0 * lambda * a) * gauss_kernel(t, a + c - lambda * t);
}

double zero_localtime_mass(double t, double y0, double lambda) {
    require_time(t);
    const double c = std::abs(y0);
    if (c == 0.0) return 0.0;
    const double rt = std::sqrt(t);
    const double p = normal_cdf((c - lambda * t) / rt) -
                     exp_times_normal_tail(2.0 * lambda * c, (c + lambda * t) / rt);
    return std::min(std::max(p, 0.0), 1.0);
}

double transition_density(double t, double y0, double xi, double alpha, double lambda) {
    require_time(t);
    if (xi > 0.0 && y0 > 0.0) {
        return (2.0 * alpha - 1.0) * std::exp(-2.0 * lambda * xi) *
                   gauss_kernel(t, xi + y0 - lambda * t) +
               gauss_kernel(t, xi - y0 + lambda * t) +
               2.0 * alpha * std::exp(-2.0 * lambda * xi) * drift_tail(t, lambda, xi + y0);
    }
    if (xi < 0.0 && y0 < 0.0) {
        return (1.0 - 2.0 * alpha) * std::exp(2.0 * lambda * xi) *
                   gauss_kernel(t, -xi - y0 - lambda * t) +
               gauss_kernel(t, -xi + y0 + lambda * t) +
               2.0 * (1.0 - alpha) * std::exp(2.0 * lambda * xi) * drift_tail(t, lambda, -xi - y0);
    }
    const double weight = xi > 0.0 ? 2.0 * alpha : 2.0 * (1.0 - alpha);
    const double m = std::abs(xi) + std::abs(y0);
    return weight * std::exp(-2.0 * lambda * std::abs(xi)) *
           (gauss_kernel(t, m - lambda * t) + drift_tail(t, lambda, m));
}

double stationary_density(double xi, double alpha, double lambda) {
    return xi > 0.0 ? alpha * 2.0 * lambda * std::exp(-2.0 * lambda * xi)
                    : (1.0 - alpha) * 2.0 * lambda * std::exp(2.0 * lambda * xi);
}

double stationary_sample(double alpha, double lambda, PathRng& rng) {
    const double side = rng.uniform_co() < alpha ? 1.0 : -1.0;
    return -side * std::log(rng.uniform()) / (2.0 * lambda);
}

double bridge_log_derivative(double t, double xi, double lambda) {
    require_time(t);
    if (xi == 0.0) return 0.0;
    const double a = std::abs(xi);
    const double z = (a - lambda * t) / std::sqrt(t);
    // ratio C1/(C1+C2) computed through C2/C1 = lambda sqrt(2 pi t) e^{z^2/2} Phi(-z),
    // which stays finite where C1 and C2 underflow individually
    double r21;
    if (z >= 0.0) {
        r21 = lambda * kSqrt2Pi * std::sqrt(t) * 0.5 * erfcx_pos(z / kSqrt2);
    } else {
        const double lg = 0.5 * z * z + std::log(lambda * kSqrt2Pi * std::sqrt(t) * normal_cdf(-z));
        r21 = lg > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(lg);
    }
    const double ratio = 1.0 / (1.0 + r21);
    const double sbar = xi > 0.0 ? 1.0 : -1.0;
    return -2.0 * lambda * sbar - (xi / t) * ratio;
}

double duality_residual(const std::function<double(double)>& f,
                        const std::function<double(double)>& g, double t, double alpha,
                        double lambda, double tol) {
    require_time(t);
    // window on which the stationary law carries all but < 1e-10 of its mass
    const double outer = (std::log(1e10) + 2.0) / (2.0 * lambda);
    const double inner = outer + lambda * t + 14.0 * std::sqrt(t);
    const double inner_tol = tol / 20.0;

    auto expectation = [&](double start, const std::function<double(double)>& test) {
        auto integrand = [&](double xi) {
            return test(xi) * transition_density(t, start, xi, alpha, lambda);
        };
        // split at the origin: the transition density (and indicator test
        // functions) may jump there
        return integrate(integrand, -inner, 0.0, inner_tol).value +
               integrate(integrand, 0.0, inner, inner_tol).value;
    };

    auto side = [&](const std::function<double(double)>& outer_fn,
                    const std::function<double(double)>& inner_fn) {
        auto integrand = [&](double y) {
            return outer_fn(y) * expectation(y, inner_fn) * stationary_density(y, alpha, lambda);
        };
        return integrate(integrand, -outer, 0.0, tol).value +
               integrate(integrand, 0.0, outer, tol).value;
    };

    return std::abs(side(g, f) - side(f, g));
}

// --- planar cases -------------------------------------------------------------

namespace {

constexpr double kLineTol = 1e-12;

inline double ct_kernel(double t, double c, double lambda) {
    return c / (kSqrt2Pi * t * std::sqrt(t)) * std::exp(-0.5 * (c - lambda * t) * (c - lambda * t) / t);
}

PlanarDensityValue planar_sigma_zero(const PlanarDensityQuery& q) {
    const auto& d = q.d;
    const auto& r = q.raw;
    if (!(d.beta > 0.0)) throw CaseMismatch("sigma-zero planar density needs beta > 0");
    const double line = r.x2 + r.g * q.t;
    const double v = q.xi1 - q.xi2;
    const double y0 = r.x1 - r.x2;
    if (std::abs(q.xi2 - line) <= kLineTol && v > 0.0) {
        return {PlanarDensityValue::Part::LineMass1D,
                zero_localtime_density(q.t, y0, q.xi1 - line, d.lambda)};
    }
    if (v > 0.0 && q.xi2 < line) {
        const double c1 = q.xi1 - (2.0 + d.beta) / d.beta * q.xi2 + r.x1 +
                          (2.0 - d.beta) / d.beta * r.x2 + 2.0 / d.beta * r.g * q.t;
        return {PlanarDensityValue::Part::Continuous2D,
                2.0 * d.alpha * (2.0 / d.beta) * std::exp(-2.0 * d.lambda * v) *
                    ct_kernel(q.t, c1, d.lambda)};
    }
    if (v <= 0.0 && q.xi1 < line) {
        const double c2 = q.xi2 - (2.0 + d.beta) / d.beta * q.xi1 + r.x1 +
                          (2.0 - d.beta) / d.beta * r.x2 + 2.0 / d.beta * r.g * q.t;
        return {PlanarDensityValue::Part::Continuous2D,
                2.0 * (1.0 - d.alpha) * (2.0 / d.beta) * std::exp(2.0 * d.lambda * v) *
                    ct_kernel(q.t, c2, d.lambda)};
    }
    throw RegionError("query point outside the support of the sigma-zero law");
}

PlanarDensityValue planar_rho_zero(const PlanarDensityQuery& q) {
    const auto& d = q.d;
    const auto& r = q.raw;
    if (!(d.beta < 2.0)) throw CaseMismatch("rho-zero planar density needs beta < 2");
    const double line = r.x1 - r.h * q.t;
    const double v = q.xi1 - q.xi2;
    const double y0 = r.x1 - r.x2;
    const double two_m_beta = 2.0 - d.beta;
    if (std::abs(q.xi1 - line) <= kLineTol && v > 0.0) {
        return {PlanarDensityValue::Part::LineMass1D,
                zero_localtime_density(q.t, y0, line - q.xi2, d.lambda)};
    }
    // time coefficient of c3/c4 from the change of variables
    // b = 2 (xi - x1 + h t) / (2 - beta): it is 2h/(2-beta) t
    if (v > 0.0 && q.xi1 > line) {
        const double c3 = (4.0 - d.beta) / two_m_beta * q.xi1 - q.xi2 -
                          d.beta / two_m_beta * r.x1 - r.x2 + 2.0 / two_m_beta * r.h * q.t;
        return {PlanarDensityValue::Part::Continuous2D,
                2.0 * d.alpha * (2.0 / two_m_beta) * std::exp(-2.0 * d.lambda * v) *
                    ct_kernel(q.t, c3, d.lambda)};
    }
    if (v <= 0.0 && q.xi2 > line) {
        const double c4 = (4.0 - d.beta) / two_m_beta * q.xi2 - q.xi1 -
                          d.beta / two_m_beta * r.x1 - r.x2 + 2.0 / two_m_beta * r.h * q.t;
        return {PlanarDensityValue::Part::Continuous2D,
                2.0 * (1.0 - d.alpha) * (2.0 / two_m_beta) * std::exp(2.0 * d.lambda * v) *
                    ct_kernel(q.t, c4, d.lambda)};
    }
    throw RegionError("query point outside the support of the rho-zero law");
}

PlanarDensityValue planar_isotropic(const PlanarDensityQuery& q) {
    const auto& d = q.d;
    const auto& r = q.raw;
    const double u = q.xi1 + q.xi2;
    const double v = q.xi1 - q.xi2;
    const double y0 = r.x1 - r.x2;
    // X1 + X2 = x1 + x2 + nu t + 2 (1 - beta) lhat + Q with Q independent of
    // the gap, so the sum given (gap, local time) is Gaussian around a
    // local-time-shifted mean
    const double shift = r.x1 + r.x2 + d.nu * q.t;
    const double lt_coef = 1.0 - d.beta;  // per unit of 2*lhat
    auto integrand = [&](double b) {
        return joint_density(q.t, y0, v, b, d.alpha, d.lambda) *
               gauss_kernel(q.t, u - shift - lt_coef * b);
    };
    const double bmax = d.lambda * q.t + 14.0 * std::sqrt(q.t);
    double value = integrate(integrand, 1e-300, bmax, q.quad_tol).value;
    if (v * y0 > 0.0) {
        value += zero_localtime_density(q.t, y0, v, d.lambda) * gauss_kernel(q.t, u - shift);
    }
    return {PlanarDensityValue::Part::Continuous2D, 2.0 * value};
}

}  // namespace

PlanarDensityValue planar_density(const PlanarDensityQuery& q) {
    require_time(q.t);
    if (!(q.raw.x1 >= q.raw.x2))
        throw RegionError("planar densities are implemented for x1 >= x2");
    switch (q.kind) {
        case PlanarCase::SigmaZero:
            if (std::abs(q.raw.sigma) > kLineTol)
                throw CaseMismatch("case sigma-zero requires sigma = 0");
            return planar_sigma_zero(q);
        case PlanarCase::RhoZero:
            if (std::abs(q.raw.rho) > kLineTol)
                throw CaseMismatch("case rho-zero requires rho = 0");
            return planar_rho_zero(q);
        case PlanarCase::Isotropic:
            if (std::abs(q.raw.rho - q.raw.sigma) > kLineTol)
                throw CaseMismatch("case isotropic requires rho = sigma");
            return planar_isotropic(q);
    }
    throw CaseMismatch("unknown planar case");
}

}  // namespace skewpair
