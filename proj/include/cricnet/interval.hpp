#pragma once

#include <cstdint>
#include <vector>

namespace cricnet {

struct IntervalEstimate {
    double lower = 0.0;
    double point = 0.0;
    double upper = 0.0;
};

// 95% normal-approximation binomial interval: p +/- 1.96 sqrt(p(1-p)/M),
// clamped to [0, 1].
IntervalEstimate binomial_ci(long long successes, long long trials);

// Quantile with linear interpolation between order statistics:
// h = q (n - 1), result = v[floor(h)] + (h - floor(h)) (v[floor(h)+1] - v[floor(h)]).
double quantile(std::vector<double> values, double q);

// Percentile bootstrap of the mean: B case-resampled means, interval at the
// 2.5 / 97.5 percentiles. Replicate b draws from the SplitMix64 substream
// substream_seed(seed, b), so replicates are order-independent. B >= 1000.
IntervalEstimate bootstrap_mean_ci(const std::vector<double>& values, int replicates,
                                   std::uint64_t seed);

}  // namespace cricnet
