#include "wsa/thresholding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wsa/combinatorics.hpp"

namespace wsa {

Signal hard_threshold(const Signal& x, int s) {
  const int n = static_cast<int>(x.size());
  if (s < 0 || s > n) {
    throw std::invalid_argument("hard_threshold: s out of range");
  }
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double ma = std::abs(x[static_cast<std::size_t>(a)]);
    double mb = std::abs(x[static_cast<std::size_t>(b)]);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  Signal out(x.size(), 0.0);
  for (int k = 0; k < s; ++k) {
    int j = order[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  }
  return out;
}

namespace {

// Suffix-table knapsack: f[j][c] = best energy over items j..N-1 within
// capacity c. Forward reconstruction prefers taking the current item on value
// ties (the lexicographically smaller support), except when the tied optimum
// is zero, where the empty support is lexicographically smallest.
Signal exact_threshold_dp(const Signal& x, const std::vector<long long>& weights,
                          double budget) {
  const int n = static_cast<int>(x.size());
  const long long capacity = static_cast<long long>(std::floor(budget + 1e-12 * budget));
  if (capacity < 0) return Signal(x.size(), 0.0);
  if (static_cast<double>(n + 1) * static_cast<double>(capacity + 1) > 5e8) {
    throw unsupported_error("exact_weighted_threshold: DP table too large for this budget");
  }

  const std::size_t cols = static_cast<std::size_t>(capacity) + 1;
  std::vector<double> f(static_cast<std::size_t>(n + 1) * cols, 0.0);
  auto at = [&](int j, long long c) -> double& {
    return f[static_cast<std::size_t>(j) * cols + static_cast<std::size_t>(c)];
  };

  for (int j = n - 1; j >= 0; --j) {
    const double value = x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    const long long kw = weights[static_cast<std::size_t>(j)];
    for (long long c = 0; c <= capacity; ++c) {
      double best = at(j + 1, c);
      if (kw <= c) {
        double take = value + at(j + 1, c - kw);
        if (take > best) best = take;
      }
      at(j, c) = best;
    }
  }

  Signal out(x.size(), 0.0);
  long long c = capacity;
  for (int j = 0; j < n; ++j) {
    const long long kw = weights[static_cast<std::size_t>(j)];
    if (kw > c) continue;
    const double value = x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    const double take = value + at(j + 1, c - kw);
    if (take >= at(j + 1, c) && take > 0.0) {
      out[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
      c -= kw;
    }
  }
  return out;
}

// Exhaustive lexicographic search. Running energies accumulate parent-first
// (ascending index); keeping only strict improvements makes the first —
// lexicographically smallest — optimum win.
Signal exact_threshold_enum(const Signal& x, const WeightVector& w, double budget) {
  const int n = static_cast<int>(x.size());
  std::vector<int> prefix;
  std::vector<int> best;  // empty set is the starting optimum (value 0)
  double best_value = 0.0;

  auto walk = [&](auto&& self, int next, double acc_weight, double acc_value) -> void {
    if (acc_value > best_value) {
      best_value = acc_value;
      best = prefix;
    }
    for (int j = next; j < n; ++j) {
      double grown = acc_weight + w.squared(static_cast<std::size_t>(j));
      if (!fits_budget(grown, budget)) continue;
      prefix.push_back(j);
      double xj = x[static_cast<std::size_t>(j)];
      self(self, j + 1, grown, acc_value + xj * xj);
      prefix.pop_back();
    }
  };
  walk(walk, 0, 0.0, 0.0);

  Signal out(x.size(), 0.0);
  for (int j : best) out[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

Signal exact_weighted_threshold(const Signal& x, const WeightVector& w, double budget,
                                ProjectionMode mode) {
  if (x.size() != w.size()) {
    throw dimension_error("exact_weighted_threshold: signal/weight length mismatch");
  }
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("exact_weighted_threshold: budget must be finite and >= 0");
  }
  switch (mode) {
    case ProjectionMode::exact_dp: {
      auto weights = integer_squared_weights(w);
      if (!weights) {
        throw unsupported_error(
            "exact_weighted_threshold: DP mode needs integer squared weights");
      }
      return exact_threshold_dp(x, *weights, budget);
    }
    case ProjectionMode::exact_enum:
      if (x.size() > 25) {
        throw unsupported_error("exact_weighted_threshold: enumeration mode needs N <= 25");
      }
      return exact_threshold_enum(x, w, budget);
    case ProjectionMode::surrogate:
      throw std::invalid_argument(
          "exact_weighted_threshold: mode must be exact_dp or exact_enum");
  }
  throw std::invalid_argument("exact_weighted_threshold: unknown mode");
}

Signal surrogate_weighted_threshold(const Signal& x, const WeightVector& w, double budget,
                                    bool stop_at_first_misfit) {
  if (x.size() != w.size()) {
    throw dimension_error("surrogate_weighted_threshold: signal/weight length mismatch");
  }
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("surrogate_weighted_threshold: budget must be finite and >= 0");
  }
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double ra = std::abs(x[static_cast<std::size_t>(a)]) / w[static_cast<std::size_t>(a)];
    double rb = std::abs(x[static_cast<std::size_t>(b)]) / w[static_cast<std::size_t>(b)];
    if (ra != rb) return ra > rb;
    return a < b;
  });
  Signal out(x.size(), 0.0);
  double acc = 0.0;
  for (int j : order) {
    double grown = acc + w.squared(static_cast<std::size_t>(j));
    if (!fits_budget(grown, budget)) {
      if (stop_at_first_misfit) break;
      continue;
    }
    acc = grown;
    out[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  }
  return out;
}

double projection_error(const Signal& x, const Signal& z) {
  if (x.size() != z.size()) {
    throw dimension_error("projection_error: length mismatch");
  }
  return l2_distance(x, z);
}

double captured_energy(const Signal& x, const SupportSet& s) {
  if (s.max_index() >= static_cast<int>(x.size())) {
    throw dimension_error("captured_energy: index out of bounds");
  }
  double acc = 0.0;
  for (int j : s) {
    double xj = x[static_cast<std::size_t>(j)];
    acc += xj * xj;
  }
  return acc;
}

Signal weighted_project(const Signal& x, const WeightVector& w, double budget,
                        ProjectionMode mode) {
  if (mode == ProjectionMode::surrogate) {
    return surrogate_weighted_threshold(x, w, budget);
  }
  return exact_weighted_threshold(x, w, budget, mode);
}

}  // namespace wsa
