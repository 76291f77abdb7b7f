#include "skewpair/planar.hpp"

#include <algorithm>
#include <cmath>

#include "skewpair/densities.hpp"

namespace skewpair {

namespace {

inline double sgn_sym(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

PlanarPath build_planar(const SbbbmPath& sb, const DerivedParams& d, const CollisionParams& raw,
                        NormalSource& qnoise) {
    if (sb.y.empty()) throw GridMismatch("empty gap path");
    if (std::abs(sb.params.lambda - d.lambda) > 1e-12 || std::abs(sb.params.alpha - d.alpha) > 1e-12)
        throw GridMismatch("gap path simulated with different (lambda, alpha) than the parameters");
    if (std::abs(sb.params.y0 - (raw.x1 - raw.x2)) > 1e-12)
        throw GridMismatch("gap path start does not match x1 - x2");

    const std::size_t n = sb.steps();
    const double rt = std::sqrt(sb.dt);
    const double rho2 = raw.rho * raw.rho;
    const double sigma2 = raw.sigma * raw.sigma;
    const double lcoef = 1.0 - d.beta - d.gamma;
    const double y0p = std::max(sb.params.y0, 0.0);
    const double y0m = std::max(-sb.params.y0, 0.0);

    PlanarPath pp;
    pp.dt = sb.dt;
    pp.y = sb.y;
    pp.w = sb.w;
    pp.x1.resize(n + 1);
    pp.x2.resize(n + 1);
    pp.r1.resize(n + 1);
    pp.r2.resize(n + 1);
    pp.lcol.resize(n + 1);
    pp.q.resize(n + 1);
    pp.q[0] = 0.0;
    for (std::size_t k = 1; k <= n; ++k) pp.q[k] = pp.q[k - 1] + rt * qnoise();

    for (std::size_t k = 0; k <= n; ++k) {
        const double t = sb.dt * static_cast<double>(k);
        const double yp = std::max(sb.y[k], 0.0);
        const double ym = std::max(-sb.y[k], 0.0);
        pp.x1[k] = raw.x1 + d.mu * t + rho2 * (yp - y0p) - sigma2 * (ym - y0m) +
                   lcoef * sb.lhat[k] + raw.rho * raw.sigma * pp.q[k];
        pp.x2[k] = pp.x1[k] - sb.y[k];
        pp.r1[k] = std::max(pp.x1[k], pp.x2[k]);
        pp.r2[k] = std::min(pp.x1[k], pp.x2[k]);
        pp.lcol[k] = 2.0 * sb.lhat[k];
    }
    return pp;
}

PlanarPath build_planar(const SbbbmPath& sb, const DerivedParams& d, const CollisionParams& raw,
                        const NoiseStream& qnoise) {
    NoiseStream qs = qnoise;
    qs.channel = 1;
    RngNormalSource src(qs);
    return build_planar(sb, d, raw, src);
}

ReconstructedNoise reconstruct_noise(const PlanarPath& pp, const DerivedParams& d) {
    const std::size_t n = pp.steps();
    const double rho = std::sqrt(0.5 * (1.0 + d.gamma));
    const double sigma = std::sqrt(0.5 * (1.0 - d.gamma));
    ReconstructedNoise rn;
    rn.b1.assign(n + 1, 0.0);
    rn.b2.assign(n + 1, 0.0);
    rn.v1.assign(n + 1, 0.0);
    rn.v2.assign(n + 1, 0.0);
    double uflat = 0.0;
    double w1_prev = 0.0, w2_prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dq = pp.q[k + 1] - pp.q[k];
        const double s = sgn_sym(pp.y[k]);
        uflat += s * dq;  // U-flat = integral of sgn(Y) dQ
        const double w1 = rho * pp.w[k + 1] + sigma * uflat;  // W1 = rho W + sigma U-flat
        const double w2 = sigma * pp.w[k + 1] - rho * uflat;
        const double dw1 = w1 - w1_prev;
        const double dw2 = w2 - w2_prev;
        w1_prev = w1;
        w2_prev = w2;
        const bool pos = pp.y[k] > 0.0;
        const double db1 = pos ? dw1 : dw2;
        const double db2 = -(pos ? dw2 : dw1);
        rn.b1[k + 1] = rn.b1[k] + db1;
        rn.b2[k + 1] = rn.b2[k] + db2;
        rn.v1[k + 1] = rn.v1[k] + (pos ? db1 : db2);
        rn.v2[k + 1] = rn.v2[k] + (pos ? db2 : db1);
        rn.qv_b1 += db1 * db1;
        rn.qv_b2 += db2 * db2;
        rn.cross_b1b2 += db1 * db2;
    }
    return rn;
}

std::vector<double> reconstruct_gap_noise(const PlanarPath& pp) {
    std::vector<double> vflat(pp.y.size(), 0.0);
    for (std::size_t k = 1; k < pp.y.size(); ++k)
        vflat[k] = vflat[k - 1] + sgn_sym(pp.y[k - 1]) * (pp.w[k] - pp.w[k - 1]);
    return vflat;
}

RankResiduals rank_paths(const PlanarPath& pp, const DerivedParams& d) {
    const std::size_t n = pp.steps();
    const double g = 0.5 * (d.lambda + d.nu);
    const double h = 0.5 * (d.lambda - d.nu);
    const double rho = std::sqrt(0.5 * (1.0 + d.gamma));
    const double sigma = std::sqrt(0.5 * (1.0 - d.gamma));
    const ReconstructedNoise rn = reconstruct_noise(pp, d);
    RankResiduals rr;
    rr.resid1.resize(n + 1);
    rr.resid2.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = pp.dt * static_cast<double>(k);
        const double model1 =
            pp.r1[0] - h * t + rho * rn.v1[k] + (1.0 - 0.5 * d.beta) * pp.lcol[k];
        const double model2 = pp.r2[0] + g * t + sigma * rn.v2[k] - 0.5 * d.beta * pp.lcol[k];
        rr.resid1[k] = pp.r1[k] - model1;
        rr.resid2[k] = pp.r2[k] - model2;
        rr.max1 = std::max(rr.max1, std::abs(rr.resid1[k]));
        rr.max2 = std::max(rr.max2, std::abs(rr.resid2[k]));
    }
    return rr;
}

double collision_local_time_check(const PlanarPath& pp, std::span<const double> vflat,
                                  double lambda) {
    if (vflat.size() != pp.y.size()) throw GridMismatch("vflat grid does not match the path");
    const double y0 = std::abs(pp.y[0]);
    double run_max = 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < pp.y.size(); ++k) {
        const double t = pp.dt * static_cast<double>(k);
        run_max = std::max(run_max, -y0 + lambda * t - vflat[k]);
        const double skorokhod = std::max(run_max, 0.0);
        worst = std::max(worst, std::abs(pp.lcol[k] - skorokhod));
    }
    return worst;
}

SdeResidualReport verify_sde_residuals(const PlanarPath& pp, const CollisionParams& raw,
                                       const DerivedParams& d) {
    const std::size_t n = pp.steps();
    const ReconstructedNoise rn = reconstruct_noise(pp, d);
    SdeResidualReport rep;
    rep.qv_b1 = rn.qv_b1;
    rep.qv_b2 = rn.qv_b2;
    rep.cross_b1b2 = rn.cross_b1b2;
    double m1 = 0.0, m2 = 0.0;  // running models for X1, X2
    for (std::size_t k = 0; k < n; ++k) {
        const bool first_lags = pp.y[k] <= 0.0;  // {X1 <= X2}
        const double db1 = rn.b1[k + 1] - rn.b1[k];
        const double db2 = rn.b2[k + 1] - rn.b2[k];
        const double dl = pp.lcol[k + 1] - pp.lcol[k];
        m1 += first_lags ? raw.g * pp.dt + raw.sigma * db1 : -raw.h * pp.dt + raw.rho * db1;
        m2 += first_lags ? -raw.h * pp.dt + raw.rho * db2 : raw.g * pp.dt + raw.sigma * db2;
        m1 += d.kappa1 * dl;
        m2 += d.kappa2 * dl;
        rep.resid1_max = std::max(rep.resid1_max, std::abs(pp.x1[k + 1] - pp.x1[0] - m1));
        rep.resid2_max = std::max(rep.resid2_max, std::abs(pp.x2[k + 1] - pp.x2[0] - m2));
    }
    return rep;
}

ReversibilityReport reversibility_check(const SbbbmParams& base, double T, std::size_t n_paths,
                                        uint64_t seed, double t1, double t2,
                                        std::size_t energy_subsample, int energy_permutations) {
    if (!(0.0 < t1 && t1 < t2 && t2 < T)) throw DomainError("need 0 < t1 < t2 < T");
    // grid visits t1, t2 and their reflections T - t2, T - t1 (plus marginal
    // check points); forward pairs come from the first half of the paths,
    // reversed pairs from the second half so the two groups are independent
    const double ta = T - t2, tb = T - t1;
    std::vector<double> times{t1, t2, ta, tb};
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    const std::size_t half = n_paths / 2;
    std::vector<std::array<double, 2>> fwd(half), rev(n_paths - half);
    std::vector<double> marg_a;  // Y(t1) under stationary start
    std::vector<double> marg_b;  // Y(tb): same law if stationary
    marg_a.reserve(n_paths);
    marg_b.reserve(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i) {
        PathRng rng(NoiseStream{seed, i, 0});
        SbbbmParams p = base;
        double y = stationary_sample(base.alpha, base.lambda, rng);
        double prev_t = 0.0;
        double y_t1 = 0.0, y_t2 = 0.0, y_ta = 0.0, y_tb = 0.0;
        for (const double t : times) {
            const ExactStep st = exact_step(p, y, t - prev_t, rng);
            y = st.y;
            prev_t = t;
            if (t == t1) y_t1 = y;
            if (t == t2) y_t2 = y;
            if (t == ta) y_ta = y;
            if (t == tb) y_tb = y;
        }
        if (i < half)
            fwd[i] = {y_t1, y_t2};
        else
            rev[i - half] = {y_tb, y_ta};  // reversed pair (Y(T-t1), Y(T-t2))
        marg_a.push_back(y_t1);
        marg_b.push_back(y_tb);
    }

    ReversibilityReport rep;
    rep.t1 = t1;
    rep.t2 = t2;
    rep.n_paths = n_paths;
    rep.energy = energy_permutation_test(fwd, rev, energy_subsample, energy_permutations,
                                         seed ^ 0x9e3779b97f4a7c15ull);
    std::sort(marg_a.begin(), marg_a.end());
    std::sort(marg_b.begin(), marg_b.end());
    rep.ks_marginal = two_sample_ks(marg_a, marg_b);
    return rep;
}

}  // namespace skewpair
