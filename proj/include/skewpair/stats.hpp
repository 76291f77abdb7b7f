#ifndef SKEWPAIR_STATS_HPP
#define SKEWPAIR_STATS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

// Statistics used by the validation harness: Kolmogorov-Smirnov distances,
// a permutation test for the two-sample energy distance in the plane, and
// small helpers for moments and correlations.

namespace skewpair {

/// One-sample KS statistic: sup |ecdf - cdf| over a sorted sample.
double ks_statistic(std::span<const double> sorted_sample,
                    const std::function<double(double)>& cdf);

/// Two-sample KS statistic over two sorted samples.
double two_sample_ks(std::span<const double> a, std::span<const double> b);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct EnergyTestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int permutations = 0;
    std::size_t per_group = 0;
};

/// Two-sample energy-distance permutation test for planar samples. The test
/// subsamples each group to `per_group` points (seeded, deterministic), builds
/// the pooled distance matrix once, and relabels `permutations` times.
EnergyTestResult energy_permutation_test(std::span<const std::array<double, 2>> a,
                                         std::span<const std::array<double, 2>> b,
                                         std::size_t per_group, int permutations, uint64_t seed);

}  // namespace skewpair

#endif
