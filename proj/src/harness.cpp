#include "skewpair/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "skewpair/csvio.hpp"
#include "skewpair/densities.hpp"
#include "skewpair/planar.hpp"
#include "skewpair/scale.hpp"

namespace skewpair {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

TransitionCdf::TransitionCdf(double t, double y0, double alpha, double lambda, int cells) {
    const double wing = std::abs(y0) + lambda * t + 14.0 * std::sqrt(t) + 16.0 / lambda;
    lo_ = -wing;
    hi_ = wing;
    step_ = (hi_ - lo_) / cells;
    cum_.resize(static_cast<std::size_t>(cells) + 1, 0.0);
    auto f = [&](double x) { return transition_density(t, y0, x, alpha, lambda); };
    double acc = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double a = lo_ + step_ * i;
        acc += gk15_panel(f, a, a + step_).value;
        cum_[static_cast<std::size_t>(i) + 1] = acc;
    }
    // normalize away the residual tail mass
    for (auto& v : cum_) v = std::min(1.0, v / acc);
}

double TransitionCdf::operator()(double x) const {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return 1.0;
    const double pos = (x - lo_) / step_;
    const std::size_t i = std::min(static_cast<std::size_t>(pos), cum_.size() - 2);
    const double frac = pos - static_cast<double>(i);
    return cum_[i] + frac * (cum_[i + 1] - cum_[i]);
}

// --- experiment spec ----------------------------------------------------------

ExperimentSpec parse_experiment_spec(const std::string& text) {
    ExperimentSpec spec;
    std::string params_text;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto as_double = [&](const std::string& v) {
            try {
                std::size_t pos = 0;
                const double x = std::stod(v, &pos);
                if (pos != v.size()) throw std::invalid_argument(v);
                return x;
            } catch (const std::exception&) {
                throw ConfigError("line " + std::to_string(lineno) + ": bad number '" + v + "'");
            }
        };
        if (key == "scheme") {
            spec.scheme = scheme_from_string(value);
        } else if (key == "dt") {
            spec.dt = as_double(value);
        } else if (key == "horizon") {
            spec.horizon = as_double(value);
        } else if (key == "n_paths") {
            spec.n_paths = static_cast<std::size_t>(as_double(value));
        } else if (key == "seed") {
            spec.seed = static_cast<uint64_t>(as_double(value));
        } else if (key == "kind") {
            if (value != "sbbbm" && value != "planar")
                throw ConfigError("kind must be sbbbm or planar");
            spec.kind = value;
        } else if (key == "emit_paths") {
            spec.emit_paths = static_cast<std::size_t>(as_double(value));
        } else if (key == "out_dir") {
            spec.out_dir = value;
        } else if (key == "bandwidth_exponent") {
            spec.bandwidth_exponent = as_double(value);
        } else if (key == "memory_budget_mb") {
            spec.memory_budget_mb = static_cast<std::size_t>(as_double(value));
        } else if (key == "params_file") {
            spec.params = load_collision_config(value);
        } else if (key == "test") {
            std::istringstream ts(value);
            ExperimentTest t;
            if (!(ts >> t.name >> t.threshold))
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": test needs '<name> <threshold>'");
            spec.tests.push_back(t);
        } else {
            // anything else must be a CollisionParams field
            params_text += key + " = " + value + "\n";
        }
    }
    if (!params_text.empty()) {
        try {
            // inline keys override the params_file values key by key
            spec.params = parse_collision_config(params_text, spec.params);
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("in experiment parameters: ") + e.what());
        }
    }
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open experiment spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_spec(buf.str());
}

// --- checks -------------------------------------------------------------------

namespace {

struct CheckContext {
    const ExperimentSpec& spec;
    const DerivedParams& d;
    std::size_t n_steps;
    SbbbmParams sb_params;
};

SbbbmPath simulate_one(const CheckContext& cx, uint64_t stream) {
    const NoiseStream ns{cx.spec.seed, stream, 0};
    switch (cx.spec.scheme) {
        case Scheme::EulerTransformed:
            return simulate_euler_transformed(cx.sb_params, cx.n_steps, cx.spec.dt, ns,
                                              cx.spec.bandwidth_exponent);
        case Scheme::ExactConditional:
            return simulate_exact(cx.sb_params, cx.n_steps, cx.spec.dt, ns);
        case Scheme::SkorokhodReflection:
            return simulate_reflected(cx.sb_params, cx.n_steps, cx.spec.dt, ns);
    }
    throw ConfigError("unknown scheme");
}

std::vector<double> terminal_values(const CheckContext& cx) {
    std::vector<double> out(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath path = simulate_one(cx, i);
        out[i] = path.y.back();
    });
    return out;
}

double check_ks_marginal(const CheckContext& cx, std::size_t& n) {
    std::vector<double> ys = terminal_values(cx);
    std::sort(ys.begin(), ys.end());
    n = ys.size();
    const TransitionCdf cdf(cx.spec.horizon, cx.sb_params.y0, cx.d.alpha, cx.d.lambda);
    return ks_statistic(ys, [&](double x) { return cdf(x); });
}

double check_sign_occupation(const CheckContext& cx, std::size_t& n) {
    const std::vector<double> ys = terminal_values(cx);
    n = ys.size();
    double pos = 0.0;
    for (const double y : ys) pos += y > 0.0 ? 1.0 : 0.0;
    return std::abs(pos / static_cast<double>(ys.size()) - cx.d.alpha);
}

double check_zero_lt_frequency(const CheckContext& cx, std::size_t& n) {
    std::vector<uint8_t> zero(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath path = simulate_one(cx, i);
        zero[i] = path.lhat.back() == 0.0 ? 1 : 0;
    });
    n = cx.spec.n_paths;
    double freq = 0.0;
    for (const auto z : zero) freq += z;
    freq /= static_cast<double>(cx.spec.n_paths);
    const double p0 = zero_localtime_mass(cx.spec.horizon, cx.sb_params.y0, cx.d.lambda);
    const double se =
        std::sqrt(std::max(p0 * (1.0 - p0), 1e-12) / static_cast<double>(cx.spec.n_paths));
    return std::abs(freq - p0) / se;  // statistic in standard-error units
}

double check_rank_residual(const CheckContext& cx, std::size_t& n) {
    std::vector<double> worst(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath sb = simulate_one(cx, i);
        const PlanarPath pp = build_planar(sb, cx.d, cx.spec.params, NoiseStream{cx.spec.seed, i, 1});
        const RankResiduals rr = rank_paths(pp, cx.d);
        worst[i] = std::max(rr.max1, rr.max2);
    });
    n = cx.spec.n_paths;
    double acc = 0.0;
    for (const double w : worst) acc += w;
    return acc / static_cast<double>(cx.spec.n_paths);
}

double check_skorokhod_identity(const CheckContext& cx, std::size_t& n) {
    std::vector<double> worst(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath sb = simulate_one(cx, i);
        const PlanarPath pp = build_planar(sb, cx.d, cx.spec.params, NoiseStream{cx.spec.seed, i, 1});
        const std::vector<double> vflat = reconstruct_gap_noise(pp);
        worst[i] = collision_local_time_check(pp, vflat, cx.d.lambda);
    });
    n = cx.spec.n_paths;
    double acc = 0.0;
    for (const double w : worst) acc += w;
    return acc / static_cast<double>(cx.spec.n_paths);
}

double check_sde_residual(const CheckContext& cx, std::size_t& n) {
    std::vector<double> worst(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath sb = simulate_one(cx, i);
        const PlanarPath pp = build_planar(sb, cx.d, cx.spec.params, NoiseStream{cx.spec.seed, i, 1});
        const SdeResidualReport rep = verify_sde_residuals(pp, cx.spec.params, cx.d);
        worst[i] = std::max(rep.resid1_max, rep.resid2_max);
    });
    n = cx.spec.n_paths;
    double acc = 0.0;
    for (const double w : worst) acc += w;
    return acc / static_cast<double>(cx.spec.n_paths);
}

double check_noise_qv(const CheckContext& cx, std::size_t& n) {
    std::vector<std::array<double, 3>> stats(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath sb = simulate_one(cx, i);
        const PlanarPath pp = build_planar(sb, cx.d, cx.spec.params, NoiseStream{cx.spec.seed, i, 1});
        const SdeResidualReport rep = verify_sde_residuals(pp, cx.spec.params, cx.d);
        stats[i] = {rep.qv_b1, rep.qv_b2, rep.cross_b1b2};
    });
    n = cx.spec.n_paths;
    double q1 = 0.0, q2 = 0.0, cr = 0.0;
    for (const auto& s : stats) {
        q1 += s[0];
        q2 += s[1];
        cr += s[2];
    }
    const double m = static_cast<double>(cx.spec.n_paths) * cx.spec.horizon;
    return std::max({std::abs(q1 / m - 1.0), std::abs(q2 / m - 1.0), std::abs(cr / m)});
}

double check_lxly_ratio(const CheckContext& cx, std::size_t& n) {
    if (cx.spec.scheme != Scheme::EulerTransformed)
        throw ConfigError("lxly_ratio runs on the euler scheme");
    const ScaleTransform tr = make_scale(cx.d.lambda, cx.d.alpha);
    const double eps = default_bandwidth(cx.spec.dt, cx.spec.bandwidth_exponent);
    std::vector<std::array<double, 2>> sums(cx.spec.n_paths);
    parallel_for(cx.spec.n_paths, [&](std::size_t i) {
        const SbbbmPath sb = simulate_one(cx, i);
        std::vector<double> z(sb.y.size()), dqv(sb.steps());
        for (std::size_t k = 0; k < sb.y.size(); ++k) z[k] = tr.p(sb.y[k]);
        for (std::size_t k = 0; k < sb.steps(); ++k) {
            const double s = tr.s(z[k]);
            dqv[k] = s * s * sb.dt;
        }
        std::vector<double> dqv_y(sb.steps(), sb.dt);
        // Z-window scaled by the dispersion of Z at 0+ (same band width in steps)
        const std::vector<double> lz =
            estimate_local_time_right(z, dqv, sb.dt, (1.0 - cx.d.alpha) * eps);
        const std::vector<double> ly = estimate_local_time_right(sb.y, dqv_y, sb.dt, eps);
        sums[i] = {lz.back(), ly.back()};
    });
    n = cx.spec.n_paths;
    double lz = 0.0, ly = 0.0;
    for (const auto& s : sums) {
        lz += s[0];
        ly += s[1];
    }
    const double ratio = lz / ly;
    const double target = 1.0 - cx.d.alpha;
    return std::abs(ratio - target) / target;
}

double check_abs_ks_mirror(const CheckContext& cx, std::size_t& n) {
    // compares |Y(T)| under alpha against the mirrored skewness 1 - alpha
    CheckContext mirrored = cx;
    SbbbmParams alt = cx.sb_params;
    alt.alpha = 1.0 - alt.alpha;
    mirrored.sb_params = alt;
    std::vector<double> a = terminal_values(cx);
    std::vector<double> b = terminal_values(mirrored);
    for (auto& v : a) v = std::abs(v);
    for (auto& v : b) v = std::abs(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    n = a.size() + b.size();
    return two_sample_ks(a, b);
}

double check_reversibility_energy(const CheckContext& cx, std::size_t& n) {
    const ReversibilityReport rep = reversibility_check(cx.sb_params, cx.spec.horizon,
                                                        cx.spec.n_paths, cx.spec.seed);
    n = cx.spec.n_paths;
    return rep.energy.p_value;
}

double check_stationarity_ks(const CheckContext& cx, std::size_t& n) {
    const ReversibilityReport rep = reversibility_check(cx.sb_params, cx.spec.horizon,
                                                        cx.spec.n_paths, cx.spec.seed, 0.2, 0.8);
    n = cx.spec.n_paths;
    return rep.ks_marginal;
}

struct CheckDef {
    double (*run)(const CheckContext&, std::size_t&);
    bool greater_is_pass;
};

const std::vector<std::pair<std::string, CheckDef>>& check_registry() {
    static const std::vector<std::pair<std::string, CheckDef>> reg = {
        {"ks_marginal", {check_ks_marginal, false}},
        {"sign_occupation", {check_sign_occupation, false}},
        {"zero_lt_frequency", {check_zero_lt_frequency, false}},
        {"rank_residual", {check_rank_residual, false}},
        {"skorokhod_identity", {check_skorokhod_identity, false}},
        {"sde_residual", {check_sde_residual, false}},
        {"noise_qv", {check_noise_qv, false}},
        {"lxly_ratio", {check_lxly_ratio, false}},
        {"abs_ks_mirror", {check_abs_ks_mirror, false}},
        {"reversibility_energy", {check_reversibility_energy, true}},
        {"stationarity_ks", {check_stationarity_ks, false}},
    };
    return reg;
}

const CheckDef& find_check(const std::string& name) {
    for (const auto& [n, def] : check_registry())
        if (n == name) return def;
    throw ConfigError("unknown check '" + name + "'");
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.n_paths == 0) throw ConfigError("n_paths must be positive");
    if (!(spec.dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(spec.horizon >= spec.dt)) throw ConfigError("horizon must cover at least one step");
    for (const auto& t : spec.tests) {
        (void)find_check(t.name);
        if (!(t.threshold > 0.0)) throw ConfigError("threshold must be positive for " + t.name);
    }
    const std::size_t n_steps = static_cast<std::size_t>(std::llround(spec.horizon / spec.dt));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    // per-worker in-flight path storage plus per-path reductions
    const std::size_t bytes =
        hw * (n_steps + 1) * 8 * 10 + spec.n_paths * 64 + spec.emit_paths * (n_steps + 1) * 48;
    if (bytes > spec.memory_budget_mb * 1024 * 1024)
        throw ResourceError("path-count x grid exceeds the configured memory budget");
}

}  // namespace

std::vector<std::string> registered_check_names() {
    std::vector<std::string> names;
    for (const auto& [n, def] : check_registry()) names.push_back(n);
    return names;
}

Report run_experiment(const ExperimentSpec& spec) {
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.spec = spec;
    report.derived = derive(spec.params);
    report.version = "skewpair 0.1.0";
    report.platform = __VERSION__;

    const std::size_t n_steps = static_cast<std::size_t>(std::llround(spec.horizon / spec.dt));
    CheckContext cx{spec, report.derived, n_steps,
                    SbbbmParams{report.derived.lambda, report.derived.alpha,
                                spec.params.x1 - spec.params.x2}};

    for (std::size_t i = 0; i < spec.emit_paths; ++i) {
        const SbbbmPath sb = simulate_one(cx, i);
        std::string file;
        if (spec.kind == "planar") {
            const PlanarPath pp =
                build_planar(sb, report.derived, spec.params, NoiseStream{spec.seed, i, 1});
            file = spec.out_dir + "/path_" + std::to_string(i) + ".csv";
            write_planar_csv(file, pp);
        } else {
            file = spec.out_dir + "/path_" + std::to_string(i) + ".csv";
            write_sbbbm_csv(file, sb);
        }
        report.emitted_files.push_back(file);
    }

    for (const auto& t : spec.tests) {
        const auto c0 = std::chrono::steady_clock::now();
        const CheckDef& def = find_check(t.name);
        CheckResult res;
        res.name = t.name;
        res.threshold = t.threshold;
        res.greater_is_pass = def.greater_is_pass;
        res.statistic = def.run(cx, res.n_samples);
        res.passed = def.greater_is_pass ? res.statistic > t.threshold : res.statistic < t.threshold;
        res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - c0)
                          .count();
        report.all_passed = report.all_passed && res.passed;
        report.checks.push_back(res);
    }
    report.total_wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string report_to_json(const Report& report) {
    nlohmann::json j;
    j["version"] = report.version;
    j["platform"] = report.platform;
    j["seed"] = report.spec.seed;
    j["scheme"] = to_string(report.spec.scheme);
    j["grid"] = {{"dt", report.spec.dt}, {"horizon", report.spec.horizon}};
    j["n_paths"] = report.spec.n_paths;
    j["derived"] = {{"alpha", report.derived.alpha},   {"beta", report.derived.beta},
                    {"lambda", report.derived.lambda}, {"nu", report.derived.nu},
                    {"gamma", report.derived.gamma},   {"mu", report.derived.mu},
                    {"kappa1", report.derived.kappa1}, {"kappa2", report.derived.kappa2}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"statistic", c.statistic},
                               {"threshold", c.threshold},
                               {"comparison", c.greater_is_pass ? ">" : "<"},
                               {"passed", c.passed},
                               {"n_samples", c.n_samples},
                               {"wall_ms", c.wall_ms}});
    }
    j["emitted_files"] = report.emitted_files;
    j["all_passed"] = report.all_passed;
    j["total_wall_ms"] = report.total_wall_ms;
    return j.dump(2);
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "dt,mean_statistic\n";
    for (const auto& r : rows)
        out += format_double(r.dt) + "," + format_double(r.mean_statistic) + "\n";
    return out;
}

std::vector<ConvergenceRow> convergence_study(const std::string& check_name,
                                              const ExperimentSpec& base,
                                              const std::vector<double>& dts) {
    if (base.n_paths == 0) throw ConfigError("n_paths must be positive");
    if (dts.size() < 3) throw ConfigError("convergence study needs at least 3 grid resolutions");
    const CheckDef& def = find_check(check_name);
    std::vector<ConvergenceRow> rows;
    for (const double dt : dts) {
        ExperimentSpec spec = base;
        spec.dt = dt;
        validate_spec(spec);
        const DerivedParams d = derive(spec.params);
        const std::size_t n_steps = static_cast<std::size_t>(std::llround(spec.horizon / spec.dt));
        CheckContext cx{spec, d, n_steps,
                        SbbbmParams{d.lambda, d.alpha, spec.params.x1 - spec.params.x2}};
        std::size_t n = 0;
        rows.push_back({dt, def.run(cx, n)});
    }
    return rows;
}

}  // namespace skewpair
