#ifndef SKEWPAIR_HARNESS_HPP
#define SKEWPAIR_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewpair/params.hpp"
#include "skewpair/quadrature.hpp"
#include "skewpair/sbbbm.hpp"
#include "skewpair/stats.hpp"

// Statistical validation engine: batch Monte Carlo over reproducible per-path
// streams, named empirical-vs-analytic checks with thresholds, and convergence
// studies. Reports are deterministic given (spec, seed, platform).

namespace skewpair {

/// Runs fn(i) for i in [0, n), fanned out over worker threads; results must be
/// written to per-index slots so the outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Cumulative-quadrature table of the transition law of Y(t); evaluation by
/// monotone linear interpolation.
class TransitionCdf {
  public:
    TransitionCdf(double t, double y0, double alpha, double lambda, int cells = 4000);
    double operator()(double x) const;
    double lo() const { return lo_; }
    double hi() const { return hi_; }

  private:
    double lo_, hi_, step_;
    std::vector<double> cum_;
};

struct ExperimentTest {
    std::string name;
    double threshold = 0.0;
};

struct ExperimentSpec {
    CollisionParams params;
    Scheme scheme = Scheme::ExactConditional;
    double dt = 1e-3;
    double horizon = 1.0;
    std::size_t n_paths = 1000;
    uint64_t seed = 424242;
    std::string kind = "sbbbm";  // sbbbm | planar
    std::size_t emit_paths = 0;
    std::string out_dir = ".";
    double bandwidth_exponent = 0.4;
    std::size_t memory_budget_mb = 2048;
    std::vector<ExperimentTest> tests;
};

ExperimentSpec parse_experiment_spec(const std::string& text);
ExperimentSpec load_experiment_spec(const std::string& path);

struct CheckResult {
    std::string name;
    double statistic = 0.0;
    double threshold = 0.0;
    bool greater_is_pass = false;  // reversed comparison (p-values)
    bool passed = false;
    std::size_t n_samples = 0;
    double wall_ms = 0.0;
};

struct Report {
    ExperimentSpec spec;
    DerivedParams derived{};
    std::vector<CheckResult> checks;
    std::vector<std::string> emitted_files;
    bool all_passed = true;
    double total_wall_ms = 0.0;
    std::string version;
    std::string platform;
};

/// Executes the simulations and the registered checks named in the spec.
/// Check failures are report entries, never exceptions; unknown check names
/// and degenerate sizes throw ConfigError before any work starts.
Report run_experiment(const ExperimentSpec& spec);

/// Serializes a report as JSON (statistics only; wall times are included but
/// documented as non-reproducible).
std::string report_to_json(const Report& report);

struct ConvergenceRow {
    double dt = 0.0;
    double mean_statistic = 0.0;
};

/// Runs one named residual-type check at each grid resolution and reports the
/// mean statistic per dt; needs at least three resolutions.
std::vector<ConvergenceRow> convergence_study(const std::string& check_name,
                                              const ExperimentSpec& base,
                                              const std::vector<double>& dts);

/// CSV rendering of a convergence table (`dt,mean_statistic` with header).
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

/// Names accepted by run_experiment / convergence_study.
std::vector<std::string> registered_check_names();

}  // namespace skewpair

#endif
