#ifndef SKEWPAIR_SBBBM_HPP
#define SKEWPAIR_SBBBM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "skewpair/errors.hpp"
#include "skewpair/rng.hpp"
#include "skewpair/scale.hpp"

// One-dimensional skew Brownian motion with bang-bang drift -lambda*sgn(y) and
// skewness alpha: the gap process of the two-particle system. Three schemes:
//   - EulerTransformed: Euler-Maruyama on the scale-transformed SDE,
//     local time recovered from an occupation estimate on Z;
//   - ExactConditional: Markov stepping from the exact one-step joint law of
//     (endpoint, symmetric local time increment);
//   - SkorokhodReflection: closed-form reflected path for alpha in {0,1}.

namespace skewpair {

struct SbbbmParams {
    double lambda;  // drift magnitude, > 0
    double alpha;   // skewness in [0,1]
    double y0;      // start point
};

enum class Scheme { EulerTransformed, ExactConditional, SkorokhodReflection };

const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

struct SbbbmPath {
    SbbbmParams params{1.0, 0.5, 0.0};
    double dt = 0.0;
    std::vector<double> y;     // n+1 points, y[0] = y0
    std::vector<double> lhat;  // symmetric local time at 0, nondecreasing, lhat[0] = 0
    std::vector<double> w;     // driving Brownian motion, cumulated (w[0] = 0)
    Scheme scheme = Scheme::ExactConditional;

    std::size_t steps() const { return y.empty() ? 0 : y.size() - 1; }
    double horizon() const { return dt * static_cast<double>(steps()); }
};

// --- exact one-step sampler -------------------------------------------------

struct ExactStep {
    double y;      // endpoint
    double dlhat;  // symmetric local-time increment (>= 0)
};

/// One exact transition of step length dt starting from y0; consumes uniforms
/// from rng. Throws SamplerError if the inverse-CDF iteration stalls.
ExactStep exact_step(const SbbbmParams& p, double y0, double dt, PathRng& rng);

// --- path simulators ---------------------------------------------------------

SbbbmPath simulate_euler_transformed(const SbbbmParams& p, std::size_t n, double dt,
                                     NormalSource& noise, double bandwidth_exponent = 0.4);
SbbbmPath simulate_euler_transformed(const SbbbmParams& p, std::size_t n, double dt,
                                     const NoiseStream& stream, double bandwidth_exponent = 0.4);

SbbbmPath simulate_exact(const SbbbmParams& p, std::size_t n, double dt, const NoiseStream& stream);

SbbbmPath simulate_reflected(const SbbbmParams& p, std::size_t n, double dt, NormalSource& noise);
SbbbmPath simulate_reflected(const SbbbmParams& p, std::size_t n, double dt,
                             const NoiseStream& stream);

// --- occupation-time local-time estimators -----------------------------------

/// Two-sided occupation estimate of the symmetric local time at 0 of a
/// unit-dispersion path: lhat(t_k) ~ sum_{j<k} 1{|y_j| < eps} dt / (4 eps).
/// Throws BandwidthError if eps <= sqrt(dt)/100.
std::vector<double> estimate_local_time(std::span<const double> y, double dt, double eps);

/// One-sided window [0, eps): estimates the right-continuous local time at 0.
/// `dqv` are the per-step quadratic-variation increments (dt for unit
/// dispersion, s(z)^2 dt on the transformed path).
std::vector<double> estimate_local_time_right(std::span<const double> y,
                                              std::span<const double> dqv, double dt, double eps);

/// Default occupation bandwidth for step dt.
inline double default_bandwidth(double dt, double exponent = 0.4) { return std::pow(dt, exponent); }

}  // namespace skewpair

#endif
