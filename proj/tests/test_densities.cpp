#include <doctest.h>

#include <cmath>

#include "skewpair/densities.hpp"
#include "skewpair/quadrature.hpp"
#include "skewpair/special_functions.hpp"

using namespace skewpair;

namespace {

double tdf_mass(double t, double y0, double alpha, double lambda) {
    const double wing = std::abs(y0) + lambda * t + 14.0 * std::sqrt(t) + 16.0 / lambda;
    auto f = [&](double x) { return transition_density(t, y0, x, alpha, lambda); };
    return integrate(f, -wing, 0.0, 2e-9).value + integrate(f, 0.0, wing, 2e-9).value;
}

CollisionParams degenerate_params(double rho, double x1, double x2) {
    CollisionParams p;  // frictionless drags: alpha = 1/2, beta = 1
    p.g = 1.0;
    p.h = 1.0;
    p.rho = rho;
    p.sigma = std::sqrt(1.0 - rho * rho);
    p.x1 = x1;
    p.x2 = x2;
    return p;
}

}  // namespace

// ============================================================================
// reference skew-BM law
// ============================================================================

TEST_CASE("reference density reduces to the heat kernel at alpha = 1/2") {
    CHECK(skew_bm_density(1.0, 0.0, 0.0, 0.5) == doctest::Approx(1.0 / kSqrt2Pi).epsilon(1e-14));
    CHECK(skew_bm_density(0.7, 0.4, -0.3, 0.5) ==
          doctest::Approx(gauss_kernel(0.7, -0.7)).epsilon(1e-14));
}

TEST_CASE("reference density vanishes on the dead side at full reflection") {
    for (double xi : {-3.0, -1.0, -1e-3}) CHECK(skew_bm_density(1.0, 0.0, xi, 1.0) == 0.0);
    CHECK(skew_bm_density(1.0, 0.0, 0.5, 1.0) > 0.0);
}

TEST_CASE("reference density integrates to 1") {
    for (const auto& [t, y0] : std::vector<std::pair<double, double>>{{0.5, 0.0}, {1.0, 1.0},
                                                                      {2.0, -1.0}}) {
        auto f = [&, t = t, y0 = y0](double x) { return skew_bm_density(t, y0, x, 0.7); };
        const double wing = std::abs(y0) + 14.0 * std::sqrt(t);
        const double mass =
            integrate(f, -wing, 0.0, 1e-10).value + integrate(f, 0.0, wing, 1e-10).value;
        CHECK(std::abs(mass - 1.0) < 1e-8);
    }
}

// ============================================================================
// joint law of (endpoint, local time)
// ============================================================================

TEST_CASE("joint branch ratio is alpha : (1-alpha)") {
    const double t = 0.8, y0 = 0.4, lambda = 1.3, alpha = 0.37;
    for (double a : {0.2, 1.0, 2.5}) {
        for (double b : {0.1, 0.9}) {
            const double plus = joint_density(t, y0, a, b, alpha, lambda);
            const double minus = joint_density(t, y0, -a, b, alpha, lambda);
            CHECK(plus / minus == doctest::Approx(alpha / (1.0 - alpha)).epsilon(1e-12));
        }
    }
}

TEST_CASE("joint plus zero-local-time mass totals 1") {
    const double t = 1.0, y0 = 1.0, lambda = 1.0, alpha = 2.0 / 3.0;
    const double wing = lambda * t + 14.0 * std::sqrt(t) + std::abs(y0);
    auto slice = [&](double xi) {
        return integrate([&](double b) { return joint_density(t, y0, xi, b, alpha, lambda); },
                         1e-12, wing, 1e-10)
            .value;
    };
    const double cont =
        integrate(slice, -wing, 0.0, 2.5e-7).value + integrate(slice, 0.0, wing, 2.5e-7).value;
    const double zero = integrate(
                            [&](double xi) { return zero_localtime_density(t, y0, xi, lambda); },
                            0.0, wing, 1e-9)
                            .value;
    CHECK(std::abs(cont + zero - 1.0) < 1e-6);
}

TEST_CASE("small-drift joint law matches the reference law with its exponential tilt") {
    // with lambda -> 0 the joint law is the reference-measure law times
    // exp(lambda(|y0| - |xi| + b) - lambda^2 t / 2); at lambda = 1e-6 the two
    // expressions agree to near machine precision
    const double t = 1.0, y0 = 0.6, alpha = 0.37, lambda = 1e-6;
    for (double xi : {-1.2, 0.4}) {
        for (double b : {0.3, 1.7}) {
            const double weight = xi > 0.0 ? 2.0 * alpha : 2.0 * (1.0 - alpha);
            const double m = std::abs(xi) + b + std::abs(y0);
            const double reference = weight * m / (kSqrt2Pi * t * std::sqrt(t)) *
                                     std::exp(-0.5 * m * m / t);
            const double tilt =
                std::exp(lambda * (std::abs(y0) - std::abs(xi) + b) - 0.5 * lambda * lambda * t);
            const double expected = reference * tilt;
            CHECK(joint_density(t, y0, xi, b, alpha, lambda) ==
                  doctest::Approx(expected).epsilon(1e-4));
        }
    }
}

// ============================================================================
// zero-local-time part
// ============================================================================

TEST_CASE("zero-local-time density vanishes at the origin and off the start side") {
    const double lambda = 1.0;
    CHECK(std::abs(zero_localtime_density(1.0, 0.7, 1e-8, lambda)) < 1e-6);
    CHECK(zero_localtime_density(1.0, 0.7, -0.5, lambda) == 0.0);
    CHECK(zero_localtime_density(1.0, 0.0, 0.5, lambda) == 0.0);
    CHECK(zero_localtime_density(1.0, -0.7, 0.5, lambda) == 0.0);
}

TEST_CASE("zero-local-time density is nonnegative on its support") {
    for (double t : {0.1, 1.0, 10.0}) {
        for (double y0 = 0.25; y0 <= 5.0; y0 += 0.25) {
            for (double xi = 0.05; xi <= 5.0; xi += 0.15) {
                CHECK(zero_localtime_density(t, y0, xi, 1.0) >= 0.0);
                CHECK(zero_localtime_density(t, -y0, -xi, 1.0) >= 0.0);
            }
        }
    }
}

TEST_CASE("closed-form no-hit mass equals the quadrature of its density") {
    for (double y0 : {0.3, 1.0, 2.5}) {
        for (double t : {0.05, 0.5, 2.0}) {
            const double lambda = 1.0;
            const double wing = y0 + lambda * t + 14.0 * std::sqrt(t);
            const double quad =
                integrate([&](double xi) { return zero_localtime_density(t, y0, xi, lambda); },
                          0.0, wing, 1e-11)
                    .value;
            CHECK(zero_localtime_mass(t, y0, lambda) == doctest::Approx(quad).epsilon(1e-8));
        }
    }
}

// ============================================================================
// marginal transition density
// ============================================================================

TEST_CASE("transition density normalizations") {
    CHECK(std::abs(tdf_mass(1.0, 0.5, 2.0 / 3.0, 1.0) - 1.0) < 1e-8);
    CHECK(std::abs(tdf_mass(2.0, -1.0, 0.3, 0.7) - 1.0) < 1e-8);
}

TEST_CASE("decomposition: marginal = integrated joint + zero-local-time part") {
    const double t = 1.0, lambda = 1.0, alpha = 2.0 / 3.0;
    const double bmax = lambda * t + 14.0 * std::sqrt(t) + 3.0;
    for (double y0 : {0.8, -0.6}) {
        for (double xi : {0.3, 1.1, -0.4, -2.0}) {
            const double joint_part =
                integrate([&](double b) { return joint_density(t, y0, xi, b, alpha, lambda); },
                          1e-12, bmax, 1e-11)
                    .value;
            const double zero_part =
                xi * y0 > 0.0 ? zero_localtime_density(t, y0, xi, lambda) : 0.0;
            CHECK(transition_density(t, y0, xi, alpha, lambda) ==
                  doctest::Approx(joint_part + zero_part).epsilon(1e-8));
        }
    }
}

TEST_CASE("fold identity: |Y| law is alpha-free") {
    const double t = 1.0, lambda = 1.0;
    for (double y0 : {0.0, 0.5, -1.2}) {
        for (double xi = -4.0; xi <= 4.0; xi += 0.05) {
            if (std::abs(xi) < 1e-9) continue;  // at 0 the one-sided convention differs
            const double f1 = transition_density(t, y0, xi, 0.2, lambda) +
                              transition_density(t, y0, -xi, 0.2, lambda);
            const double f2 = transition_density(t, y0, xi, 0.5, lambda) +
                              transition_density(t, y0, -xi, 0.5, lambda);
            const double f3 = transition_density(t, y0, xi, 0.8, lambda) +
                              transition_density(t, y0, -xi, 0.8, lambda);
            CHECK(std::abs(f1 - f2) < 1e-12);
            CHECK(std::abs(f1 - f3) < 1e-12);
        }
    }
}

TEST_CASE("long-horizon transition density approaches the stationary law") {
    const double lambda = 1.0, alpha = 2.0 / 3.0;
    for (double xi = -3.0; xi <= 3.0; xi += 0.125) {
        if (std::abs(xi) < 1e-9) continue;
        const double p = transition_density(50.0, 0.0, xi, alpha, lambda);
        const double s = stationary_density(xi, alpha, lambda);
        CHECK(std::abs(p - s) / s < 1e-3);
    }
}

TEST_CASE("small-drift transition density approaches the reference law") {
    const double lambda = 1e-6, alpha = 0.3, t = 1.0;
    for (double y0 : {0.0, 0.7, -0.4}) {
        for (double xi : {-2.0, -0.3, 0.5, 1.8}) {
            const double p = transition_density(t, y0, xi, alpha, lambda);
            const double q = skew_bm_density(t, y0, xi, alpha);
            CHECK(std::abs(p - q) / q < 1e-4);
        }
    }
}

TEST_CASE("densities are nonnegative across a parameter grid") {
    for (double t : {0.2, 1.0, 5.0}) {
        for (double y0 : {-1.5, 0.0, 0.8}) {
            for (double alpha : {0.1, 0.5, 0.9}) {
                for (double xi = -6.0; xi <= 6.0; xi += 0.37) {
                    CHECK(transition_density(t, y0, xi, alpha, 1.0) >= 0.0);
                    CHECK(skew_bm_density(t, y0, xi, alpha) >= 0.0);
                    CHECK(joint_density(t, y0, xi, 0.7, alpha, 1.0) >= 0.0);
                    CHECK(stationary_density(xi, alpha, 1.0) >= 0.0);
                }
            }
        }
    }
}

TEST_CASE("chapman-kolmogorov at (0.5, 0.5)") {
    const double lambda = 1.0, alpha = 2.0 / 3.0, y0 = 0.3;
    const double wing = 0.3 + 1.0 + 14.0 + 16.0;
    for (double xi : {-1.0, 0.4}) {
        auto f = [&](double u) {
            return transition_density(0.5, y0, u, alpha, lambda) *
                   transition_density(0.5, u, xi, alpha, lambda);
        };
        const double conv =
            integrate(f, -wing, 0.0, 5e-8).value + integrate(f, 0.0, wing, 5e-8).value;
        CHECK(std::abs(conv - transition_density(1.0, y0, xi, alpha, lambda)) < 1e-5);
    }
}

// ============================================================================
// stationary law and duality
// ============================================================================

TEST_CASE("stationary density: mass, jump, positive-side weight") {
    const double alpha = 0.3, lambda = 2.0;
    auto f = [&](double x) { return stationary_density(x, alpha, lambda); };
    const double mass = integrate(f, -8.0, 0.0, 1e-11).value + integrate(f, 0.0, 8.0, 1e-11).value;
    CHECK(std::abs(mass - 1.0) < 1e-10);
    CHECK(stationary_density(0.0, alpha, lambda) ==
          doctest::Approx(2.0 * lambda * (1.0 - alpha)).epsilon(1e-14));
    CHECK(stationary_density(1e-14, alpha, lambda) ==
          doctest::Approx(2.0 * lambda * alpha).epsilon(1e-10));
    const double above = integrate(f, 0.0, 8.0, 1e-11).value;
    CHECK(above == doctest::Approx(alpha).epsilon(1e-10));
}

TEST_CASE("stationary sampler matches the law") {
    PathRng rng(NoiseStream{5150, 0, 0});
    const double alpha = 2.0 / 3.0, lambda = 1.0;
    const int n = 100000;
    int above = 0;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = stationary_sample(alpha, lambda, rng);
        above += x > 0.0 ? 1 : 0;
        acc += x;
    }
    // P(X > 0) = alpha; E X = (2 alpha - 1)/(2 lambda)
    CHECK(std::abs(static_cast<double>(above) / n - alpha) < 0.005);
    CHECK(std::abs(acc / n - (2.0 * alpha - 1.0) / (2.0 * lambda)) < 0.01);
}

TEST_CASE("duality residuals") {
    const double t = 1.0, alpha = 2.0 / 3.0, lambda = 1.0;
    auto ind_pos = [](double x) { return x > 0.0 ? 1.0 : 0.0; };
    auto ind_neg = [](double x) { return x < 0.0 ? 1.0 : 0.0; };
    auto one = [](double) { return 1.0; };
    CHECK(duality_residual(ind_pos, ind_pos, t, alpha, lambda) < 1e-6);
    CHECK(duality_residual(ind_pos, ind_neg, t, alpha, lambda) < 1e-6);
    CHECK(duality_residual(one, ind_neg, t, alpha, lambda, 1e-10) < 1e-8);
    // asymmetric pair with an off-origin jump: breaks the gap-only structure
    // that makes the indicator pairs agree for free
    auto bump = [](double x) { return std::exp(-(x - 1.0) * (x - 1.0)); };
    auto heavy = [](double x) { return 1.0 / (1.0 + x * x) + 0.2 * (x > 0.3 ? 1.0 : 0.0); };
    CHECK(duality_residual(bump, heavy, 0.7, 0.3, 1.3) < 1e-6);
}

TEST_CASE("stationarity: one transition step preserves the invariant law") {
    const double lambda = 1.2, alpha = 0.3, t = 0.8;
    const double wing = (std::log(1e12)) / (2.0 * lambda) + lambda * t + 14.0 * std::sqrt(t);
    for (double xi : {-1.1, -0.2, 0.4, 2.0}) {
        auto f = [&](double y) {
            return stationary_density(y, alpha, lambda) *
                   transition_density(t, y, xi, alpha, lambda);
        };
        const double evolved =
            integrate(f, -wing, 0.0, 1e-10).value + integrate(f, 0.0, wing, 1e-10).value;
        CHECK(evolved == doctest::Approx(stationary_density(xi, alpha, lambda)).epsilon(1e-7));
    }
}

// ============================================================================
// bridge drift
// ============================================================================

TEST_CASE("bridge log-derivative: odd symmetry and finite-difference agreement") {
    const double lambda = 1.0, t = 1.0;
    for (double xi : {0.5, 2.0}) {
        CHECK(bridge_log_derivative(t, xi, lambda) ==
              doctest::Approx(-bridge_log_derivative(t, -xi, lambda)).epsilon(1e-14));
        const double h = 1e-5;
        const double fd = (std::log(transition_density(t, 0.0, xi + h, 0.4, lambda)) -
                           std::log(transition_density(t, 0.0, xi - h, 0.4, lambda))) /
                          (2.0 * h);
        CHECK(std::abs(bridge_log_derivative(t, xi, lambda) - fd) < 1e-6);
    }
    // far in the tail: rebuild the two tail weights independently; the second
    // integral is evaluated by quadrature after factoring out its value at the
    // lower limit so the integrand is O(1)
    {
        const double xi = 10.0;
        const double c1 = std::exp(-0.5 * (xi + lambda * t) * (xi + lambda * t) / t);
        const double peak = std::exp(-0.5 * (xi - lambda * t) * (xi - lambda * t) / t);
        const double rel =
            integrate(
                [&](double u) {
                    const double e1 = 0.5 * (u - lambda * t) * (u - lambda * t) / t;
                    const double e0 = 0.5 * (xi - lambda * t) * (xi - lambda * t) / t;
                    return std::exp(-(e1 - e0));
                },
                xi, xi + 20.0 * std::sqrt(t), 1e-13)
                .value;
        const double c2 = lambda * std::exp(-2.0 * lambda * xi) * peak * rel;
        const double expected = -2.0 * lambda - (xi / t) * c1 / (c1 + c2);
        CHECK(std::abs(bridge_log_derivative(t, xi, lambda) - expected) < 1e-10);
    }
}

// ============================================================================
// planar cases
// ============================================================================

TEST_CASE("sigma-zero planar law: total mass including the line part") {
    const CollisionParams raw = degenerate_params(1.0, 1.0, 0.0);  // sigma = 0
    const DerivedParams d = derive(raw);
    const double t = 1.0;
    const double line = raw.x2 + raw.g * t;
    auto val = [&](double xi1, double xi2) {
        return planar_density({t, raw, d, xi1, xi2, PlanarCase::SigmaZero}).value;
    };
    auto upper_slice = [&](double xi2) {
        return integrate([&](double xi1) { return val(xi1, xi2); }, xi2 + 1e-13, xi2 + 12.0, 1e-9)
            .value;
    };
    auto lower_slice = [&](double xi1) {
        return integrate([&](double xi2) { return val(xi1, xi2); }, xi1 + 1e-13, xi1 + 12.0, 1e-9)
            .value;
    };
    const double mass2d = integrate(upper_slice, line - 11.0, line - 1e-9, 4e-6).value +
                          integrate(lower_slice, line - 11.0, line - 1e-9, 4e-6).value;
    const double mass_line =
        integrate([&](double xi1) { return val(xi1, line); }, line + 1e-13, line + 12.0, 1e-9)
            .value;
    CHECK(std::abs(mass2d + mass_line - 1.0) < 1e-5);
}

TEST_CASE("sigma-zero planar law: gap marginal equals the 1-D transition density") {
    const CollisionParams raw = degenerate_params(1.0, 1.0, 0.0);
    const DerivedParams d = derive(raw);
    const double t = 1.0;
    const double line = raw.x2 + raw.g * t;
    const double y0 = raw.x1 - raw.x2;
    for (double v : {0.4, 1.3}) {  // gap value > 0
        auto f = [&](double xi2) {
            return planar_density({t, raw, d, xi2 + v, xi2, PlanarCase::SigmaZero}).value;
        };
        const double cont = integrate(f, line - 14.0, line - 1e-12, 1e-9).value;
        const double line_part =
            planar_density({t, raw, d, line + v, line, PlanarCase::SigmaZero}).value;
        CHECK(cont + line_part ==
              doctest::Approx(transition_density(t, y0, v, d.alpha, d.lambda)).epsilon(1e-6));
    }
}

TEST_CASE("sigma-zero planar mass at skewed parameters") {
    // alpha = 2/3, beta = 2/3: the 2*alpha vs 2*(1-alpha) branch weights are
    // unequal here, unlike at the symmetric point
    CollisionParams raw = degenerate_params(1.0, 0.5, 0.0);
    raw.zeta1 = 0.0;
    const DerivedParams d = derive(raw);
    REQUIRE(d.alpha == doctest::Approx(2.0 / 3.0));
    const double t = 0.8;
    const double line = raw.x2 + raw.g * t;
    auto val = [&](double xi1, double xi2) {
        return planar_density({t, raw, d, xi1, xi2, PlanarCase::SigmaZero}).value;
    };
    auto upper_slice = [&](double xi2) {
        return integrate([&](double xi1) { return val(xi1, xi2); }, xi2 + 1e-13, xi2 + 12.0, 1e-9)
            .value;
    };
    auto lower_slice = [&](double xi1) {
        return integrate([&](double xi2) { return val(xi1, xi2); }, xi1 + 1e-13, xi1 + 12.0, 1e-9)
            .value;
    };
    const double mass2d = integrate(upper_slice, line - 12.0, line - 1e-9, 4e-6).value +
                          integrate(lower_slice, line - 12.0, line - 1e-9, 4e-6).value;
    const double mass_line =
        integrate([&](double xi1) { return val(xi1, line); }, line + 1e-13, line + 12.0, 1e-9)
            .value;
    CHECK(std::abs(mass2d + mass_line - 1.0) < 1e-5);
}

TEST_CASE("rho-zero planar mass at skewed parameters") {
    CollisionParams raw = degenerate_params(0.0, 0.5, 0.0);
    raw.zeta2 = 2.0;  // alpha = 2/3, beta = 4/3 < 2
    const DerivedParams d = derive(raw);
    REQUIRE(d.beta == doctest::Approx(4.0 / 3.0));
    const double t = 0.8;
    const double line = raw.x1 - raw.h * t;
    auto val = [&](double xi1, double xi2) {
        return planar_density({t, raw, d, xi1, xi2, PlanarCase::RhoZero}).value;
    };
    auto upper_slice = [&](double xi1) {
        return integrate([&](double xi2) { return val(xi1, xi2); }, xi1 - 12.0, xi1 - 1e-13, 1e-9)
            .value;
    };
    auto lower_slice = [&](double xi2) {
        return integrate([&](double xi1) { return val(xi1, xi2); }, xi2 - 12.0, xi2 - 1e-13, 1e-9)
            .value;
    };
    const double mass2d = integrate(upper_slice, line + 1e-9, line + 12.0, 4e-6).value +
                          integrate(lower_slice, line + 1e-9, line + 12.0, 4e-6).value;
    const double mass_line =
        integrate([&](double xi2) { return val(line, xi2); }, line - 12.0, line - 1e-13, 1e-9)
            .value;
    CHECK(std::abs(mass2d + mass_line - 1.0) < 1e-5);
}

TEST_CASE("rho-zero planar law: total mass including the line part") {
    const CollisionParams raw = degenerate_params(0.0, 1.0, 0.0);  // rho = 0
    const DerivedParams d = derive(raw);
    const double t = 1.0;
    const double line = raw.x1 - raw.h * t;  // = 0
    auto val = [&](double xi1, double xi2) {
        return planar_density({t, raw, d, xi1, xi2, PlanarCase::RhoZero}).value;
    };
    // upper region: xi1 > line, xi2 in (xi1 - 12, xi1]
    auto upper_slice = [&](double xi1) {
        return integrate([&](double xi2) { return val(xi1, xi2); }, xi1 - 12.0, xi1 - 1e-13, 1e-9)
            .value;
    };
    // lower region: xi2 > line, xi1 in (xi2 - 12, xi2]
    auto lower_slice = [&](double xi2) {
        return integrate([&](double xi1) { return val(xi1, xi2); }, xi2 - 12.0, xi2 - 1e-13, 1e-9)
            .value;
    };
    const double mass2d = integrate(upper_slice, line + 1e-9, line + 11.0, 4e-6).value +
                          integrate(lower_slice, line + 1e-9, line + 11.0, 4e-6).value;
    const double mass_line =
        integrate([&](double xi2) { return val(line, xi2); }, line - 12.0, line - 1e-13, 1e-9)
            .value;
    CHECK(std::abs(mass2d + mass_line - 1.0) < 1e-5);
}

TEST_CASE("isotropic planar law: summing out one coordinate recovers the gap law") {
    CollisionParams raw = degenerate_params(1.0 / kSqrt2, 0.5, 0.0);
    const DerivedParams d = derive(raw);
    const double t = 0.7;
    const double y0 = raw.x1 - raw.x2;
    for (double v : {-0.8, 0.6}) {
        // integrate the planar density over u = xi1 + xi2 at fixed gap v
        auto f = [&](double u) {
            return 0.5 * planar_density({t, raw, d, 0.5 * (u + v), 0.5 * (u - v),
                                         PlanarCase::Isotropic, 1e-10})
                             .value;
        };
        const double shift = raw.x1 + raw.x2 + d.nu * t;
        const double wing = 14.0 * std::sqrt(t) + 2.0 * d.lambda * t + 2.0;
        const double mass = integrate(f, shift - wing, shift + wing, 1e-8).value;
        CHECK(mass == doctest::Approx(transition_density(t, y0, v, d.alpha, d.lambda))
                          .epsilon(1e-5));
    }
}

TEST_CASE("planar density rejects mismatched cases and off-support queries") {
    const CollisionParams raw = degenerate_params(1.0, 1.0, 0.0);
    const DerivedParams d = derive(raw);
    CHECK_THROWS_AS(planar_density({1.0, raw, d, 0.0, 0.5, PlanarCase::RhoZero}), CaseMismatch);
    // X2 cannot exceed x2 + g t when sigma = 0
    CHECK_THROWS_AS(planar_density({1.0, raw, d, 3.0, 2.0, PlanarCase::SigmaZero}), RegionError);
    CollisionParams swapped = raw;
    swapped.x1 = -1.0;
    swapped.x2 = 0.0;
    const DerivedParams ds = derive(swapped);
    CHECK_THROWS_AS(planar_density({1.0, swapped, ds, 0.0, 0.0, PlanarCase::SigmaZero}),
                    RegionError);
}
