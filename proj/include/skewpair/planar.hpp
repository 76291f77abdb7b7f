#ifndef SKEWPAIR_PLANAR_HPP
#define SKEWPAIR_PLANAR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "skewpair/params.hpp"
#include "skewpair/sbbbm.hpp"
#include "skewpair/stats.hpp"

// Synthesis of the two-particle paths from a simulated gap process plus an
// independent Brownian noise, via the closed-form skew representations; ranked
// paths, collision local time, and discrete residual checks of the governing
// equations with reconstructed driving noises.

namespace skewpair {

struct PlanarPath {
    double dt = 0.0;
    std::vector<double> x1, x2;  // particle positions; x2[k] == x1[k] - y[k] by construction
    std::vector<double> r1, r2;  // ranked (leader / laggard) positions
    std::vector<double> y;       // gap, bit-identical to the source SbbbmPath
    std::vector<double> lcol;    // collision local time = 2 * lhat, nondecreasing
    std::vector<double> q;       // independent planar noise, cumulated
    std::vector<double> w;       // driving noise of the gap, cumulated

    std::size_t steps() const { return x1.empty() ? 0 : x1.size() - 1; }
};

/// Builds (X1, X2) from a gap path: X1 = x1 + mu t + rho^2 (Y+ - y0+)
/// - sigma^2 (Y- - y0-) + (1 - beta - gamma) lhat + rho sigma Q, X2 = X1 - Y,
/// with Q freshly sampled from `qnoise`.
PlanarPath build_planar(const SbbbmPath& sb, const DerivedParams& d, const CollisionParams& raw,
                        const NoiseStream& qnoise);
PlanarPath build_planar(const SbbbmPath& sb, const DerivedParams& d, const CollisionParams& raw,
                        NormalSource& qnoise);

/// Driving noises recovered from a planar path (name-Brownian motions b1, b2
/// and rank-Brownian motions v1, v2, all cumulated on the grid).
struct ReconstructedNoise {
    std::vector<double> b1, b2, v1, v2;
    double qv_b1 = 0.0;      // quadratic variation of b1 at the horizon
    double qv_b2 = 0.0;
    double cross_b1b2 = 0.0; // cross variation at the horizon
};

ReconstructedNoise reconstruct_noise(const PlanarPath& pp, const DerivedParams& d);

/// Gap-driving noise V-flat = integral of sgn(Y) dW (symmetric signum,
/// left-endpoint rule).
std::vector<double> reconstruct_gap_noise(const PlanarPath& pp);

struct RankResiduals {
    std::vector<double> resid1, resid2;  // pathwise residuals of the rank equations
    double max1 = 0.0, max2 = 0.0;
};

/// Residuals of the ranked dynamics: R1 - [r1 - h t + rho V1 + (1 - beta/2) Lcol]
/// and R2 - [r2 + g t + sigma V2 - (beta/2) Lcol], with V1, V2 reconstructed
/// from the name-Brownian motions.
RankResiduals rank_paths(const PlanarPath& pp, const DerivedParams& d);

/// Max-norm distance between the collision local time and its Skorokhod
/// running-max representation driven by vflat.
double collision_local_time_check(const PlanarPath& pp, std::span<const double> vflat,
                                  double lambda);

struct SdeResidualReport {
    double resid1_max = 0.0;  // particle-1 equation, single-local-time form
    double resid2_max = 0.0;
    double qv_b1 = 0.0;
    double qv_b2 = 0.0;
    double cross_b1b2 = 0.0;
};

/// Discrete residuals of the name-particle equations using the reconstructed
/// (B1, B2) and kappa-weighted collision local time.
SdeResidualReport verify_sde_residuals(const PlanarPath& pp, const CollisionParams& raw,
                                       const DerivedParams& d);

struct ReversibilityReport {
    EnergyTestResult energy;    // joint law of (Y(t1), Y(t2)) vs reversed pair
    double ks_marginal = 0.0;   // KS between Y(ta) and Y(tb) under stationary start
    double t1 = 0.0, t2 = 0.0;
    std::size_t n_paths = 0;
};

/// Simulates stationary-start paths with the exact sampler and tests the
/// distributional time symmetry on the pair (t1, t2) within horizon T.
ReversibilityReport reversibility_check(const SbbbmParams& base, double T, std::size_t n_paths,
                                        uint64_t seed, double t1 = 0.3, double t2 = 0.7,
                                        std::size_t energy_subsample = 1250,
                                        int energy_permutations = 999);

}  // namespace skewpair

#endif
