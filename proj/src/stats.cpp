#include "skewpair/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skewpair/errors.hpp"
#include "skewpair/rng.hpp"

namespace skewpair {

double ks_statistic(std::span<const double> s, const std::function<double(double)>& cdf) {
    if (s.empty()) throw DomainError("ks_statistic needs a nonempty sample");
    const double n = static_cast<double>(s.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 1 < s.size() && s[i] > s[i + 1]) throw DomainError("sample must be sorted");
        const double f = cdf(s[i]);
        sup = std::max(sup, std::max(f - static_cast<double>(i) / n,
                                     static_cast<double>(i + 1) / n - f));
    }
    return sup;
}

double two_sample_ks(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw DomainError("two_sample_ks needs nonempty samples");
    double sup = 0.0;
    std::size_t i = 0, j = 0;
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        sup = std::max(sup, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return sup;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("pearson needs matched samples");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

namespace {

// energy statistic from a pooled distance matrix and a group-A membership mask
double energy_from_matrix(const std::vector<float>& dist, std::size_t n_total,
                          const std::vector<uint8_t>& in_a, std::size_t na, std::size_t nb,
                          double total_sum) {
    double saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n_total; ++i) {
        const float* row = dist.data() + i * n_total;
        if (in_a[i]) {
            for (std::size_t j = i + 1; j < n_total; ++j)
                if (in_a[j]) saa += row[j];
        } else {
            for (std::size_t j = i + 1; j < n_total; ++j)
                if (!in_a[j]) sbb += row[j];
        }
    }
    const double sab = total_sum - saa - sbb;
    const double a = static_cast<double>(na), b = static_cast<double>(nb);
    return 2.0 * sab / (a * b) - 2.0 * saa / (a * a) - 2.0 * sbb / (b * b);
}

}  // namespace

EnergyTestResult energy_permutation_test(std::span<const std::array<double, 2>> a,
                                         std::span<const std::array<double, 2>> b,
                                         std::size_t per_group, int permutations, uint64_t seed) {
    if (a.size() < 2 || b.size() < 2) throw DomainError("energy test needs nonempty samples");
    per_group = std::min({per_group, a.size(), b.size()});
    PathRng rng(NoiseStream{seed, 0x656e6572, 0});

    // seeded subsample without replacement (partial Fisher-Yates)
    auto subsample = [&](std::span<const std::array<double, 2>> src) {
        std::vector<std::size_t> idx(src.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::array<double, 2>> out(per_group);
        for (std::size_t k = 0; k < per_group; ++k) {
            const std::size_t pick =
                k + static_cast<std::size_t>(rng.uniform_co() * static_cast<double>(idx.size() - k));
            std::swap(idx[k], idx[std::min(pick, idx.size() - 1)]);
            out[k] = src[idx[k]];
        }
        return out;
    };
    const auto sa = subsample(a);
    const auto sb = subsample(b);

    const std::size_t n = 2 * per_group;
    std::vector<std::array<double, 2>> pool(sa);
    pool.insert(pool.end(), sb.begin(), sb.end());
    std::vector<float> dist(n * n, 0.0f);
    double total_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = pool[i][0] - pool[j][0];
            const double dy = pool[i][1] - pool[j][1];
            const float d = static_cast<float>(std::sqrt(dx * dx + dy * dy));
            dist[i * n + j] = d;
            dist[j * n + i] = d;
            total_sum += d;
        }
    }

    std::vector<uint8_t> in_a(n, 0);
    for (std::size_t i = 0; i < per_group; ++i) in_a[i] = 1;
    EnergyTestResult res;
    res.per_group = per_group;
    res.permutations = permutations;
    res.statistic = energy_from_matrix(dist, n, in_a, per_group, per_group, total_sum);

    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    int geq = 0;
    for (int p = 0; p < permutations; ++p) {
        for (std::size_t k = n - 1; k > 0; --k) {
            const std::size_t j =
                static_cast<std::size_t>(rng.uniform_co() * static_cast<double>(k + 1));
            std::swap(labels[k], labels[std::min(j, k)]);
        }
        std::fill(in_a.begin(), in_a.end(), 0);
        for (std::size_t i = 0; i < per_group; ++i) in_a[labels[i]] = 1;
        const double stat = energy_from_matrix(dist, n, in_a, per_group, per_group, total_sum);
        if (stat >= res.statistic) ++geq;
    }
    res.p_value = (1.0 + geq) / (1.0 + permutations);
    return res;
}

}  // namespace skewpair
