#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "wsa/types.hpp"

namespace wsa {

/// x(i) = amplitude / i^decay for i = 1..length.
struct PowerLawParams {
  int amplitude = 1;  // a >= 1
  int decay = 1;      // b >= 1
  int length = 1;     // N
};

Signal power_law_signal(const PowerLawParams& p);

/// hard_threshold(x, s); for decreasing power-law inputs this keeps the
/// first-s prefix.
Signal sparse_truncate(const Signal& x, int s);

/// Weights 1 on the first s atoms, 3 on the next s, 10 on the tail.
/// Requires 2s < N.
WeightVector block_weights(int n, int s);

/// Closed-form weighted projection for monotone inputs: the longest prefix
/// whose weight fits the budget. Validates |x| nonincreasing and w
/// nondecreasing; callers outside that regime must use the exact projection.
Signal best_ws_prefix(const Signal& x, const WeightVector& w, double budget);

/// i.i.d. N(0, sigma^2) entries, deterministic per seed.
MeasurementVector gaussian_noise(int m, double sigma, std::uint64_t seed);

/// Uniform integer draws for amplitude and decay from inclusive ranges.
PowerLawParams random_power_law_params(std::mt19937_64& rng, std::pair<int, int> a_range,
                                       std::pair<int, int> b_range, int length);
PowerLawParams random_power_law_params(std::uint64_t seed, std::pair<int, int> a_range,
                                       std::pair<int, int> b_range, int length);

}  // namespace wsa
