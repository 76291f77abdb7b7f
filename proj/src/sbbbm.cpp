#include "skewpair/sbbbm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewpair/densities.hpp"
#include "skewpair/special_functions.hpp"

namespace skewpair {

namespace {

// left-continuous signum: sgn(0) = -1 (used for drift evaluation on the grid;
// the time spent exactly at zero has measure zero in the limit)
inline double sgn_left(double y) { return y > 0.0 ? 1.0 : -1.0; }

void check_common(const SbbbmParams& p, double dt) {
    if (!(p.lambda > 0.0)) throw DomainError("sbbbm requires lambda > 0");
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) throw DomainError("sbbbm requires alpha in [0,1]");
    if (!(dt > 0.0)) throw DomainError("sbbbm requires dt > 0");
}

}  // namespace

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::EulerTransformed: return "euler";
        case Scheme::ExactConditional: return "exact";
        case Scheme::SkorokhodReflection: return "reflected";
    }
    return "exact";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "euler") return Scheme::EulerTransformed;
    if (name == "exact") return Scheme::ExactConditional;
    if (name == "reflected") return Scheme::SkorokhodReflection;
    throw ConfigError("unknown scheme '" + name + "' (euler | exact | reflected)");
}

namespace {

// CDF of the endpoint distance on the no-local-time event (unnormalized; its
// total mass is zero_localtime_mass).
struct NoHitLaw {
    double lambda, t, c, rt;

    double cdf(double xi) const {
        const double wp = (c + lambda * t) / rt;
        return normal_cdf((xi - c + lambda * t) / rt) - normal_cdf((lambda * t - c) / rt) -
               (exp_times_normal_tail(2.0 * lambda * c, wp) -
                exp_times_normal_tail(2.0 * lambda * c, (xi + c + lambda * t) / rt));
    }

    double pdf(double xi) const {
        return gauss_kernel(t, xi - c + lambda * t) -
               std::exp(-2.0 * lambda * xi) * gauss_kernel(t, xi + c - lambda * t);
    }
};

// Law of the sum S = |endpoint| + 2*local time increment on the event that
// local time accrues; density proportional to
//   (s + c) exp(-(s + c - lambda t)^2 / 2t) (1 - exp(-2 lambda s)).
struct SumLaw {
    double lambda, t, c, rt;

    double cdf_unnorm(double s) const {
        const double z1 = (s + c - lambda * t) / rt;
        const double w1 = (c - lambda * t) / rt;
        const double z2 = (s + c + lambda * t) / rt;
        const double w2 = (c + lambda * t) / rt;
        const double a = lambda * kSqrt2Pi * rt;
        return std::exp(-0.5 * z1 * z1) * std::expm1(-2.0 * lambda * s) +
               a * (normal_cdf(z1) - normal_cdf(w1) +
                    exp_times_normal_tail(2.0 * lambda * c, w2) -
                    exp_times_normal_tail(2.0 * lambda * c, z2));
    }

    double total() const {
        const double w1 = (c - lambda * t) / rt;
        const double w2 = (c + lambda * t) / rt;
        return lambda * kSqrt2Pi * rt *
               (normal_tail(w1) + exp_times_normal_tail(2.0 * lambda * c, w2));
    }

    double pdf_unnorm(double s) const {
        const double z1 = (s + c - lambda * t) / rt;
        return (s + c) / t * std::exp(-0.5 * z1 * z1) * (-std::expm1(-2.0 * lambda * s));
    }
};

// Bracketed Newton iteration for a nondecreasing cdf; falls back to bisection
// whenever the Newton step leaves the bracket.
template <typename Cdf, typename Pdf>
double invert_cdf(double target, double lo, double hi, Cdf cdf, Pdf pdf, double scale) {
    double flo = cdf(lo) - target;
    double fhi = cdf(hi) - target;
    int grow = 0;
    while (fhi < 0.0 && grow++ < 120) {
        hi = lo + 2.0 * (hi - lo);
        fhi = cdf(hi) - target;
    }
    if (flo > 0.0 || fhi < 0.0) throw SamplerError("inverse-CDF bracket failed");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = cdf(x) - target;
        if (std::abs(fx) <= 1e-12 * scale) return x;
        if (fx > 0.0)
            hi = x;
        else
            lo = x;
        const double d = pdf(x);
        double next = d > 0.0 ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (hi - lo <= 1e-14 * (1.0 + std::abs(x))) return 0.5 * (lo + hi);
        x = next;
    }
    throw SamplerError("inverse-CDF iteration did not converge");
}

}  // namespace

ExactStep exact_step(const SbbbmParams& p, double y0, double dt, PathRng& rng) {
    const double lambda = p.lambda;
    const double c = std::abs(y0);
    const double rt = std::sqrt(dt);
    const double side = y0 >= 0.0 ? 1.0 : -1.0;

    // Far from the origin the zero-hit probability is below ~1e-23: the step
    // is a plain Gaussian with drift toward zero.
    if ((c - lambda * dt) / rt >= 10.0) {
        const double z = rng.normal();
        double xi = c - lambda * dt + rt * z;
        if (xi <= 0.0) xi = 1e-300;  // probability < 1e-23, keep the side
        return {side * xi, 0.0};
    }

    const double p0 = zero_localtime_mass(dt, y0, lambda);
    const double u = rng.uniform_co();
    if (u < p0) {
        NoHitLaw law{lambda, dt, c, rt};
        const double hi0 = c + lambda * dt + 8.0 * rt;
        const double xi = invert_cdf(
            u, 0.0, hi0, [&](double x) { return law.cdf(x); }, [&](double x) { return law.pdf(x); },
            std::max(p0, 1e-3));
        return {side * xi, 0.0};
    }

    // Local time accrues: endpoint sign is + with probability alpha, and the
    // sum S = |endpoint| + (2 lhat increment) has the closed-form law above.
    const double sign = rng.uniform_co() < p.alpha ? 1.0 : -1.0;
    SumLaw law{lambda, dt, c, rt};
    const double total = law.total();
    const double u2 = rng.uniform();
    const double hi0 = std::max(lambda * dt - c, 0.0) + c + lambda * dt + 8.0 * rt + 1e-12;
    const double s = invert_cdf(
        u2 * total, 0.0, hi0, [&](double x) { return law.cdf_unnorm(x); },
        [&](double x) { return law.pdf_unnorm(x); }, total);
    const double u3 = rng.uniform_co();
    const double m = -std::expm1(-2.0 * lambda * s);
    double xi = -std::log1p(-u3 * m) / (2.0 * lambda);
    xi = std::clamp(xi, 0.0, s);
    const double b = s - xi;
    return {sign * xi, 0.5 * b};
}

SbbbmPath simulate_exact(const SbbbmParams& p, std::size_t n, double dt,
                         const NoiseStream& stream) {
    check_common(p, dt);
    PathRng rng(stream);
    SbbbmPath path;
    path.params = p;
    path.dt = dt;
    path.scheme = Scheme::ExactConditional;
    path.y.resize(n + 1);
    path.lhat.resize(n + 1);
    path.w.resize(n + 1);
    path.y[0] = p.y0;
    path.lhat[0] = 0.0;
    path.w[0] = 0.0;
    double drift_integral = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const ExactStep st = exact_step(p, path.y[k], dt, rng);
        path.y[k + 1] = st.y;
        path.lhat[k + 1] = path.lhat[k] + st.dlhat;
        // driving noise recovered from the dynamics; left-endpoint drift rule
        drift_integral += sgn_left(path.y[k]) * dt;
        path.w[k + 1] = path.y[k + 1] - p.y0 + p.lambda * drift_integral -
                        2.0 * (2.0 * p.alpha - 1.0) * path.lhat[k + 1];
    }
    return path;
}

SbbbmPath simulate_euler_transformed(const SbbbmParams& p, std::size_t n, double dt,
                                     NormalSource& noise, double bandwidth_exponent) {
    check_common(p, dt);
    const ScaleTransform tr = make_scale(p.lambda, p.alpha);
    const double rt = std::sqrt(dt);
    // the Z-side window scales with the dispersion of Z at 0+, so the band is
    // the same number of steps wide for every skewness
    const double eps = (1.0 - p.alpha) * default_bandwidth(dt, bandwidth_exponent);
    if (eps <= rt / 100.0) throw BandwidthError("occupation bandwidth too small for this grid");

    SbbbmPath path;
    path.params = p;
    path.dt = dt;
    path.scheme = Scheme::EulerTransformed;
    path.y.resize(n + 1);
    path.lhat.resize(n + 1);
    path.w.resize(n + 1);
    double z = tr.p(p.y0);
    path.y[0] = p.y0;
    path.lhat[0] = 0.0;
    path.w[0] = 0.0;
    double lz = 0.0;  // right local time of Z at 0, occupation estimate
    const double lz_to_lhat = 1.0 / ((1.0 - p.alpha) * 2.0 * p.alpha);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = tr.s(z);
        if (z > 0.0 && z < eps) lz += s * s * dt / (2.0 * eps);
        const double dw = rt * noise();
        z += s * dw;
        path.w[k + 1] = path.w[k] + dw;
        path.y[k + 1] = tr.q(z);
        path.lhat[k + 1] = lz * lz_to_lhat;
    }
    return path;
}

SbbbmPath simulate_euler_transformed(const SbbbmParams& p, std::size_t n, double dt,
                                     const NoiseStream& stream, double bandwidth_exponent) {
    RngNormalSource src(stream);
    return simulate_euler_transformed(p, n, dt, src, bandwidth_exponent);
}

SbbbmPath simulate_reflected(const SbbbmParams& p, std::size_t n, double dt, NormalSource& noise) {
    check_common(p, dt);
    if (!(p.alpha == 0.0 || p.alpha == 1.0))
        throw DomainError("reflected scheme requires alpha in {0,1}");
    // alpha = 0 is the mirror image of alpha = 1: simulate -Y driven by -W.
    const double mirror = p.alpha == 1.0 ? 1.0 : -1.0;
    const double rt = std::sqrt(dt);

    SbbbmPath path;
    path.params = p;
    path.dt = dt;
    path.scheme = Scheme::SkorokhodReflection;
    path.y.resize(n + 1);
    path.lhat.resize(n + 1);
    path.w.resize(n + 1);
    path.y[0] = p.y0;
    path.lhat[0] = 0.0;
    path.w[0] = 0.0;

    // Discrete Skorokhod map for the (mirrored) nonnegative process, with
    // D_j = lambda t_j - Wm_j:  L_k = (max_{j in reflected phase} D_j - ref)^+,
    // Ym_k = ref - D_k + L_k, where ref = D_{k0} + Ym_{k0} at the start of the
    // reflected phase. A start below the origin drifts up freely (+lambda)
    // until it first reaches 0.
    double w = 0.0;   // driving noise of Y (stored)
    double wm = 0.0;  // driving noise of the mirrored process, = mirror * w
    double ym = mirror * p.y0;
    bool reflecting = ym >= 0.0;
    double ref = ym;   // D at phase start plus value at phase start
    double dmax = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double dw = rt * noise();
        w += dw;
        wm += mirror * dw;
        path.w[k] = w;
        const double t = dt * static_cast<double>(k);
        const double d = p.lambda * t - wm;
        if (!reflecting) {
            ym += p.lambda * dt + mirror * dw;
            if (ym >= 0.0) {
                reflecting = true;
                ref = d + ym;
                dmax = d;
            }
            path.y[k] = mirror * ym;
            path.lhat[k] = path.lhat[k - 1];
        } else {
            dmax = std::max(dmax, d);
            const double l = std::max(dmax - ref, 0.0);
            ym = ref - d + l;
            path.y[k] = mirror * ym;
            path.lhat[k] = 0.5 * l;
        }
    }
    return path;
}

SbbbmPath simulate_reflected(const SbbbmParams& p, std::size_t n, double dt,
                             const NoiseStream& stream) {
    RngNormalSource src(stream);
    return simulate_reflected(p, n, dt, src);
}

// Grid points parked exactly on the origin (the reflection map produces them
// at every new running maximum) represent boundary touches of zero duration,
// so the occupation windows below are open at 0.

std::vector<double> estimate_local_time(std::span<const double> y, double dt, double eps) {
    if (!(eps > 0.0)) throw BandwidthError("bandwidth must be positive");
    if (eps <= std::sqrt(dt) / 100.0) throw BandwidthError("bandwidth too small for this grid");
    std::vector<double> lhat(y.size(), 0.0);
    double acc = 0.0;
    for (std::size_t k = 1; k < y.size(); ++k) {
        const double a = std::abs(y[k - 1]);
        if (a > 0.0 && a < eps) acc += dt / (4.0 * eps);
        lhat[k] = acc;
    }
    return lhat;
}

std::vector<double> estimate_local_time_right(std::span<const double> y,
                                              std::span<const double> dqv, double dt, double eps) {
    if (!(eps > 0.0)) throw BandwidthError("bandwidth must be positive");
    if (eps <= std::sqrt(dt) / 100.0) throw BandwidthError("bandwidth too small for this grid");
    if (dqv.size() + 1 != y.size()) throw GridMismatch("dqv must have one entry per step");
    std::vector<double> l(y.size(), 0.0);
    double acc = 0.0;
    for (std::size_t k = 1; k < y.size(); ++k) {
        if (y[k - 1] > 0.0 && y[k - 1] < eps) acc += dqv[k - 1] / (2.0 * eps);
        l[k] = acc;
    }
    return l;
}

}  // namespace skewpair
