#include "wsa/signal_models.hpp"

#include <cmath>

#include "wsa/combinatorics.hpp"
#include "wsa/rng.hpp"
#include "wsa/thresholding.hpp"

namespace wsa {

Signal power_law_signal(const PowerLawParams& p) {
  if (p.amplitude < 1 || p.decay < 1 || p.length < 1) {
    throw std::invalid_argument("power_law_signal: amplitude, decay, length must be >= 1");
  }
  Signal x(static_cast<std::size_t>(p.length));
  for (int i = 1; i <= p.length; ++i) {
    x[static_cast<std::size_t>(i - 1)] =
        static_cast<double>(p.amplitude) / std::pow(static_cast<double>(i), p.decay);
  }
  return x;
}

Signal sparse_truncate(const Signal& x, int s) { return hard_threshold(x, s); }

WeightVector block_weights(int n, int s) {
  if (s < 1 || 2 * s >= n) {
    throw std::invalid_argument("block_weights: need 1 <= s and 2s < N");
  }
  std::vector<double> w(static_cast<std::size_t>(n), 10.0);
  for (int j = 0; j < s; ++j) w[static_cast<std::size_t>(j)] = 1.0;
  for (int j = s; j < 2 * s; ++j) w[static_cast<std::size_t>(j)] = 3.0;
  return WeightVector(std::move(w));
}

Signal best_ws_prefix(const Signal& x, const WeightVector& w, double budget) {
  if (x.size() != w.size()) {
    throw dimension_error("best_ws_prefix: signal/weight length mismatch");
  }
  for (std::size_t j = 1; j < x.size(); ++j) {
    if (std::abs(x[j]) > std::abs(x[j - 1])) {
      throw std::invalid_argument("best_ws_prefix: |x| must be nonincreasing");
    }
    if (w[j] < w[j - 1]) {
      throw std::invalid_argument("best_ws_prefix: weights must be nondecreasing");
    }
  }
  Signal out(x.size(), 0.0);
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    acc += w.squared(j);
    if (!fits_budget(acc, budget)) break;
    out[j] = x[j];
  }
  return out;
}

MeasurementVector gaussian_noise(int m, double sigma, std::uint64_t seed) {
  if (m < 0 || sigma < 0.0) {
    throw std::invalid_argument("gaussian_noise: need m >= 0 and sigma >= 0");
  }
  MeasurementVector e(static_cast<std::size_t>(m), 0.0);
  if (sigma == 0.0) return e;
  std::mt19937_64 rng = seeded_engine(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  for (double& v : e) v = normal(rng);
  return e;
}

PowerLawParams random_power_law_params(std::mt19937_64& rng, std::pair<int, int> a_range,
                                       std::pair<int, int> b_range, int length) {
  if (a_range.first > a_range.second || b_range.first > b_range.second ||
      a_range.first < 1 || b_range.first < 1) {
    throw std::invalid_argument("random_power_law_params: ranges must be nonempty with min >= 1");
  }
  std::uniform_int_distribution<int> a_dist(a_range.first, a_range.second);
  std::uniform_int_distribution<int> b_dist(b_range.first, b_range.second);
  PowerLawParams p;
  p.amplitude = a_dist(rng);
  p.decay = b_dist(rng);
  p.length = length;
  return p;
}

PowerLawParams random_power_law_params(std::uint64_t seed, std::pair<int, int> a_range,
                                       std::pair<int, int> b_range, int length) {
  std::mt19937_64 rng = seeded_engine(seed);
  return random_power_law_params(rng, a_range, b_range, length);
}

}  // namespace wsa
