#ifndef SKEWPAIR_DENSITIES_HPP
#define SKEWPAIR_DENSITIES_HPP

#include <functional>

#include "skewpair/errors.hpp"
#include "skewpair/params.hpp"
#include "skewpair/rng.hpp"

// Closed-form laws of the skew bang-bang process and of the planar pair in the
// degenerate and isotropic dispersion cases, plus the quadrature-based duality
// residual. All evaluators are stateless and thread-safe.

namespace skewpair {

/// Transition density of driftless skew Brownian motion (the reference law).
double skew_bm_density(double t, double y0, double xi, double alpha);

/// Joint density of (Y(t), 2 Lhat(t)) at (xi, b), b > 0: the weight 2*alpha
/// (resp. 2*(1-alpha)) on the xi > 0 (resp. xi <= 0) side times an explicit
/// Gaussian-type kernel in |xi| + b + |y0|.
double joint_density(double t, double y0, double xi, double b, double alpha, double lambda);

/// Density in xi of the event "no local time by t, Y(t) = xi"; nonzero only
/// when xi and y0 lie strictly on the same side of the origin.
double zero_localtime_density(double t, double y0, double xi, double lambda);

/// Mass of the no-local-time event by time t (closed form; equals the xi
/// integral of zero_localtime_density).
double zero_localtime_mass(double t, double y0, double lambda);

/// Marginal transition density of Y(t).
double transition_density(double t, double y0, double xi, double alpha, double lambda);

/// Stationary (double-exponential) density.
double stationary_density(double xi, double alpha, double lambda);

/// Inverse-CDF draw from the stationary density.
double stationary_sample(double alpha, double lambda, PathRng& rng);

/// Logarithmic slope in xi of the transition density started at 0; the drift
/// correction of the time-reversed bridge.
double bridge_log_derivative(double t, double xi, double lambda);

/// |LHS - RHS| of the stationary duality between test functions f and g, via
/// nested quadrature of transition_density against the stationary law.
double duality_residual(const std::function<double(double)>& f,
                        const std::function<double(double)>& g, double t, double alpha,
                        double lambda, double tol = 1e-8);

// --- planar transition densities ---------------------------------------------

enum class PlanarCase { SigmaZero, RhoZero, Isotropic };

struct PlanarDensityQuery {
    double t;
    CollisionParams raw;
    DerivedParams d;
    double xi1;
    double xi2;
    PlanarCase kind;
    double quad_tol = 1e-9;  // for the isotropic convolution
};

struct PlanarDensityValue {
    enum class Part { Continuous2D, LineMass1D } part;
    double value;
};

/// Transition density of (X1(t), X2(t)) in the degenerate cases (sigma = 0 or
/// rho = 0, where the law splits into a 2-D absolutely continuous part and a
/// 1-D singular mass on a drifting line) and in the isotropic case (computed
/// by integrating the local time out numerically). Requires x1 >= x2.
PlanarDensityValue planar_density(const PlanarDensityQuery& q);

}  // namespace skewpair

#endif
