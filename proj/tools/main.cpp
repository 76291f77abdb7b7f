// skewsim: simulation and density CLI for the two-particle skew-elastic
// collision system. Subcommands: params, simulate, density, verify, figures.
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewpair/acceptance.hpp"
#include "skewpair/csvio.hpp"
#include "skewpair/densities.hpp"
#include "skewpair/harness.hpp"
#include "skewpair/planar.hpp"

namespace {

using namespace skewpair;

constexpr uint64_t kDefaultSeed = 424242;  // documented default; fix for reproducible runs

std::string default_out_dir() {
    const char* env = std::getenv("SKEWPAIR_OUT_DIR");
    return env ? env : ".";
}

struct GridSpec {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' || g.step <= 0.0 ||
        g.hi < g.lo)
        throw ConfigError("bad grid spec '" + text + "' (expected lo:hi:step)");
    return g;
}

nlohmann::json params_json(const CollisionParams& raw) {
    const DerivedParams d = derive(raw);
    const Regime regime = classify(d, raw);
    nlohmann::json notes = nlohmann::json::array();
    for (const auto tag : regime.notes) notes.push_back(to_string(tag));
    nlohmann::json j;
    j["raw"] = {{"zeta1", raw.zeta1}, {"zeta2", raw.zeta2}, {"eta1", raw.eta1},
                {"eta2", raw.eta2},   {"g", raw.g},         {"h", raw.h},
                {"rho", raw.rho},     {"sigma", raw.sigma}, {"x1", raw.x1},
                {"x2", raw.x2}};
    j["derived"] = {{"alpha", d.alpha},       {"beta", d.beta},     {"zeta", d.zeta},
                    {"eta", d.eta},           {"zeta_bar", d.zeta_bar},
                    {"eta_bar", d.eta_bar},   {"lambda", d.lambda}, {"nu", d.nu},
                    {"gamma", d.gamma},       {"delta", d.delta},   {"mu", d.mu},
                    {"kappa1", d.kappa1},     {"kappa2", d.kappa2}};
    j["regime"] = {{"tag", to_string(regime.tag)},
                   {"notes", notes},
                   {"priority_applied", regime.priority_applied},
                   {"priority_note",
                    "when several regimes co-fire the tag prefers reflection over frictionless "
                    "over beta extremes; all matches are listed in notes"}};
    return j;
}

int cmd_params(const std::string& config, const std::string& out) {
    const CollisionParams raw = load_collision_config(config);
    const std::string text = params_json(raw).dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        atomic_write_file(out, text);
    return 0;
}

int cmd_simulate(const std::string& config, uint64_t seed, bool seed_set,
                 const std::string& out_dir, const std::string& report_path) {
    ExperimentSpec spec = load_experiment_spec(config);
    if (seed_set) spec.seed = seed;
    if (!out_dir.empty())
        spec.out_dir = out_dir;
    else if (spec.out_dir == ".")
        spec.out_dir = default_out_dir();
    const Report report = run_experiment(spec);
    const std::string json = report_to_json(report) + "\n";
    if (report_path.empty())
        std::cout << json;
    else
        atomic_write_file(report_path, json);
    return report.all_passed ? 0 : 1;
}

int cmd_density(const std::string& kase, double t, double y0, double alpha, double lambda,
                double b, const std::string& grid_text, const std::string& grid2_text,
                const std::string& config, const std::string& out) {
    const GridSpec grid = parse_grid(grid_text);
    std::string csv;
    auto emit_1d = [&](const std::function<double(double)>& f) {
        csv = "xi,value\n";
        for (double x = grid.lo; x <= grid.hi + 1e-12; x += grid.step)
            csv += format_double(x) + "," + format_double(f(x)) + "\n";
    };
    if (kase == "pstar") {
        emit_1d([&](double xi) { return skew_bm_density(t, y0, xi, alpha); });
    } else if (kase == "tdf") {
        emit_1d([&](double xi) { return transition_density(t, y0, xi, alpha, lambda); });
    } else if (kase == "joint") {
        emit_1d([&](double xi) { return joint_density(t, y0, xi, b, alpha, lambda); });
    } else if (kase == "joint0") {
        emit_1d([&](double xi) { return zero_localtime_density(t, y0, xi, lambda); });
    } else if (kase == "stationary") {
        emit_1d([&](double xi) { return stationary_density(xi, alpha, lambda); });
    } else if (kase == "bridge") {
        emit_1d([&](double xi) { return bridge_log_derivative(t, xi, lambda); });
    } else if (kase == "planar-sigma0" || kase == "planar-rho0" || kase == "planar-iso") {
        if (config.empty()) throw ConfigError("planar cases need --config with the parameters");
        if (grid2_text.empty()) throw ConfigError("planar cases need --grid2 for xi2");
        const GridSpec grid2 = parse_grid(grid2_text);
        const CollisionParams raw = load_collision_config(config);
        const DerivedParams d = derive(raw);
        const PlanarCase pc = kase == "planar-sigma0" ? PlanarCase::SigmaZero
                              : kase == "planar-rho0" ? PlanarCase::RhoZero
                                                      : PlanarCase::Isotropic;
        csv = "xi1,xi2,value\n";
        for (double x1 = grid.lo; x1 <= grid.hi + 1e-12; x1 += grid.step) {
            for (double x2 = grid2.lo; x2 <= grid2.hi + 1e-12; x2 += grid2.step) {
                double v;
                try {
                    v = planar_density({t, raw, d, x1, x2, pc}).value;
                } catch (const RegionError&) {
                    v = 0.0;  // outside the support of the continuous part
                }
                csv += format_double(x1) + "," + format_double(x2) + "," + format_double(v) + "\n";
            }
        }
    } else {
        throw ConfigError("unknown density case '" + kase + "'");
    }
    if (out.empty())
        std::cout << csv;
    else
        atomic_write_file(out, csv);
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& config, uint64_t seed,
               const std::string& report_path) {
    if (!suite.empty()) {
        if (suite != "acceptance") throw ConfigError("unknown suite '" + suite + "'");
        const auto results = run_acceptance(std::cout, seed);
        if (!report_path.empty()) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : results)
                j.push_back({{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed},
                             {"detail", r.detail},
                             {"wall_s", r.wall_s}});
            atomic_write_file(report_path, j.dump(2) + "\n");
        }
        return all_passed(results) ? 0 : 1;
    }
    if (config.empty()) throw ConfigError("verify needs --suite acceptance or --config FILE");
    return cmd_simulate(config, seed, true, "", report_path);
}

int cmd_figures(int id, uint64_t seed, const std::string& out_dir) {
    struct Scenario {
        double z1, z2, e1, e2;
    };
    Scenario sc{};
    switch (id) {
        case 1: sc = {1, 1, 1, 1}; break;
        case 2: sc = {0, 1, 1, 1}; break;
        case 3: sc = {1, 2, 1, 1}; break;
        case 4: sc = {0, 2, 1, 1}; break;
        default: throw ConfigError("unknown figure id (1-4)");
    }
    CollisionParams raw;
    raw.zeta1 = sc.z1;
    raw.zeta2 = sc.z2;
    raw.eta1 = sc.e1;
    raw.eta2 = sc.e2;
    raw.g = 1.0;
    raw.h = 1.0;
    raw.rho = 0.0;
    raw.sigma = 1.0;
    raw.x1 = 0.0;  // start positions are not part of the scenario; recorded in the sidecar
    raw.x2 = 0.0;
    const DerivedParams d = derive(raw);
    const double dt = 1e-4;
    const std::size_t n = 10000;
    const SbbbmParams sp{d.lambda, d.alpha, raw.x1 - raw.x2};
    const bool boundary = d.alpha == 0.0 || d.alpha == 1.0;
    const SbbbmPath sb = boundary ? simulate_reflected(sp, n, dt, NoiseStream{seed, 0, 0})
                                  : simulate_exact(sp, n, dt, NoiseStream{seed, 0, 0});
    const PlanarPath pp = build_planar(sb, d, raw, NoiseStream{seed, 0, 1});
    const std::string base = out_dir + "/figure" + std::to_string(id);
    write_figure_csv(base + ".csv", pp);
    nlohmann::json meta = params_json(raw);
    meta["figure"] = id;
    meta["seed"] = seed;
    meta["dt"] = dt;
    meta["horizon"] = 1.0;
    meta["scheme"] = to_string(sb.scheme);
    meta["note"] = "initial positions default to (0, 0)";
    atomic_write_file(base + ".json", meta.dump(2) + "\n");
    std::cout << base << ".csv\n" << base << ".json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-particle skew-elastic collision simulator"};
    app.require_subcommand(1);

    std::string config, out, suite, kase, grid_text, grid2_text, report_path, out_dir;
    uint64_t seed = kDefaultSeed;
    bool seed_set = false;
    double t = 1.0, y0 = 0.0, alpha = 0.5, lambda = 1.0, b = 1.0;
    int figure_id = 1;

    auto* p_params = app.add_subcommand("params", "derive and classify parameters");
    p_params->add_option("--config", config, "parameter file (key = value)")->required();
    p_params->add_option("--out", out, "write JSON here instead of stdout");

    auto* p_sim = app.add_subcommand("simulate", "run a scenario / experiment spec");
    p_sim->add_option("--config", config, "experiment spec file")->required();
    auto* sim_seed_opt = p_sim->add_option("--seed", seed, "override the spec seed");
    p_sim->add_option("--out-dir", out_dir, "override the spec output directory");
    p_sim->add_option("--report", report_path, "write the JSON report here");

    auto* p_dens = app.add_subcommand("density", "evaluate closed-form laws on a grid");
    p_dens->add_option("--case", kase, "pstar|tdf|joint|joint0|stationary|bridge|planar-sigma0|planar-rho0|planar-iso")
        ->required();
    p_dens->add_option("--t", t, "time");
    p_dens->add_option("--y0", y0, "start point");
    p_dens->add_option("--alpha", alpha, "skewness");
    p_dens->add_option("--lambda", lambda, "drift magnitude");
    p_dens->add_option("--b", b, "local-time level (joint case)");
    p_dens->add_option("--grid", grid_text, "lo:hi:step for xi (or xi1)")->required();
    p_dens->add_option("--grid2", grid2_text, "lo:hi:step for xi2 (planar cases)");
    p_dens->add_option("--config", config, "parameter file for planar cases");
    p_dens->add_option("--out", out, "write CSV here instead of stdout");

    auto* p_verify = app.add_subcommand("verify", "run verification suites");
    p_verify->add_option("--suite", suite, "acceptance");
    p_verify->add_option("--config", config, "experiment spec with tests");
    p_verify->add_option("--seed", seed, "seed override");
    p_verify->add_option("--report", report_path, "write the JSON report here");

    auto* p_fig = app.add_subcommand("figures", "emit simulation scenario data");
    p_fig->add_option("--id", figure_id, "figure id in 1..4")->required();
    p_fig->add_option("--seed", seed, "seed");
    p_fig->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags and bad values are config errors
    }

    seed_set = sim_seed_opt->count() > 0;

    try {
        if (p_params->parsed()) return cmd_params(config, out);
        if (p_sim->parsed())
            return cmd_simulate(config, seed, seed_set, out_dir, report_path);
        if (p_dens->parsed())
            return cmd_density(kase, t, y0, alpha, lambda, b, grid_text, grid2_text, config, out);
        if (p_verify->parsed()) return cmd_verify(suite, config, seed, report_path);
        if (p_fig->parsed())
            return cmd_figures(figure_id, seed, out_dir.empty() ? default_out_dir() : out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const WellPosednessError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
