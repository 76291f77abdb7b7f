#ifndef SKEWPAIR_PARAMS_HPP
#define SKEWPAIR_PARAMS_HPP

#include <string>
#include <vector>

#include "skewpair/errors.hpp"

// Parameter algebra for the two-particle collision system: drag coefficients
// (zeta_i, eta_i), rank-assigned drifts g (laggard) and -h (leader), rank
// dispersions sigma / rho, and the derived skewness and apportionment
// quantities that drive every simulator and density in the library.

namespace skewpair {

struct CollisionParams {
    double zeta1 = 1.0, zeta2 = 1.0;  // leader-side drag on particle 1 / 2
    double eta1 = 1.0, eta2 = 1.0;    // laggard-side drag on particle 1 / 2
    double g = 1.0, h = 1.0;          // laggard drift >= 0, leader drift magnitude >= 0
    double rho = 0.0, sigma = 1.0;    // leader / laggard dispersion, rho^2 + sigma^2 = 1
    double x1 = 0.0, x2 = 0.0;        // initial positions
};

struct DerivedParams {
    double alpha;     // eta / (eta + zeta), in [0,1]
    double beta;      // (eta*zeta_bar + zeta*eta_bar) / (eta + zeta)
    double zeta;      // 1 + (zeta1 - zeta2)/2
    double eta;       // 1 - (eta1 - eta2)/2
    double zeta_bar;  // (zeta1 + zeta2)/2
    double eta_bar;   // (eta1 + eta2)/2
    double lambda;    // g + h > 0
    double nu;        // g - h
    double gamma;     // rho^2 - sigma^2
    double delta;     // 2 rho sigma
    double mu;        // g rho^2 - h sigma^2
    double kappa1;    // alpha - beta/2
    double kappa2;    // 1 - alpha - beta/2
};

enum class RegimeTag {
    PerfectReflectionFirst,   // alpha = 1: particle 1 bounces off particle 2
    PerfectReflectionSecond,  // alpha = 0: particle 2 bounces off particle 1
    FrictionlessBoth,         // eta1+zeta1 = eta2+zeta2 = 2
    FrictionlessFirstOnly,    // (1-zeta1) eta + (1-eta1) zeta = 0
    FrictionlessSecondOnly,   // (1-zeta2) eta + (1-eta2) zeta = 0
    LaggardUnfelt,            // beta = 0
    LeaderUnfelt,             // beta = 2
    SymmetricSkew,            // alpha = 1/2
    Generic,
};

const char* to_string(RegimeTag tag);

struct Regime {
    RegimeTag tag = RegimeTag::Generic;      // most specific match
    std::vector<RegimeTag> notes;            // all matched conditions
    bool priority_applied = false;           // several conditions co-fired
};

inline constexpr double kRegimeTol = 1e-10;

/// Validates the admissibility gates and computes the derived quantities.
/// Throws WellPosednessError when the system has no (or no unique) solution.
DerivedParams derive(const CollisionParams& raw);

/// Classifies the special collision patterns. Several conditions may co-fire;
/// `tag` reports the most specific one (reflection > frictionless > beta
/// extremes > symmetric skew), `notes` keeps them all.
Regime classify(const DerivedParams& d, const CollisionParams& raw);

/// Reads a `key = value` parameter file whose keys mirror the CollisionParams
/// field names; keys not present keep the values of `base`. Unknown keys
/// raise ConfigError.
CollisionParams parse_collision_config(const std::string& text, CollisionParams base = {});
CollisionParams load_collision_config(const std::string& path);

}  // namespace skewpair

#endif
