#include "wsa/combinatorics.hpp"

#include <algorithm>
#include <cmath>

namespace wsa {

int max_support_size(const WeightVector& w, double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("max_support_size: budget must be finite and >= 0");
  }
  std::vector<double> squared(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) squared[j] = w.squared(j);
  std::sort(squared.begin(), squared.end());
  double acc = 0.0;
  int count = 0;
  for (double s : squared) {
    if (!fits_budget(acc + s, budget)) break;
    acc += s;
    ++count;
  }
  return count;
}

std::optional<std::vector<long long>> integer_squared_weights(const WeightVector& w) {
  std::vector<long long> out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    double sq = w.squared(j);
    double rounded = std::round(sq);
    if (std::abs(sq - rounded) > 1e-9) return std::nullopt;
    out[j] = static_cast<long long>(rounded);
  }
  return out;
}

namespace {

BigCount count_supports_dp(const std::vector<long long>& weights, double budget,
                           CountMode mode) {
  long long capacity;
  if (mode == CountMode::exact) {
    double rounded = std::round(budget);
    // With integer weights no set can hit a non-integer budget exactly.
    if (std::abs(budget - rounded) > 1e-9) return 0;
    capacity = static_cast<long long>(rounded);
  } else {
    capacity = static_cast<long long>(std::floor(budget + 1e-12 * budget));
  }
  if (capacity < 0) return 0;

  std::vector<BigCount> dp(static_cast<std::size_t>(capacity) + 1, 0);
  dp[0] = 1;  // the empty set
  for (long long kw : weights) {
    if (kw > capacity) continue;
    for (long long c = capacity; c >= kw; --c) {
      dp[static_cast<std::size_t>(c)] += dp[static_cast<std::size_t>(c - kw)];
    }
  }
  if (mode == CountMode::exact) return dp[static_cast<std::size_t>(capacity)];
  BigCount total = 0;
  for (const BigCount& v : dp) total += v;
  return total;
}

}  // namespace

BigCount count_supports(const WeightVector& w, double budget, CountMode mode) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("count_supports: budget must be finite and >= 0");
  }
  if (auto weights = integer_squared_weights(w)) {
    return count_supports_dp(*weights, budget, mode);
  }
  if (w.size() > 25) {
    throw unsupported_error(
        "count_supports: non-integer squared weights require enumeration, "
        "which is refused for N > 25");
  }
  BigCount count = 0;
  enumerate_supports(w, budget, static_cast<int>(w.size()), [&](const SupportSet& s) {
    if (mode == CountMode::at_most) {
      ++count;
      return;
    }
    double card = weighted_cardinality(s, w);
    if (std::abs(card - budget) <= 1e-12 * std::max(1.0, budget)) ++count;
  });
  return count;
}

void enumerate_supports(const WeightVector& w, double budget, int n_limit,
                        const std::function<void(const SupportSet&)>& visit) {
  if (n_limit < 0 || n_limit > static_cast<int>(w.size())) {
    throw dimension_error("enumerate_supports: n_limit out of range");
  }
  if (n_limit > 25) {
    throw unsupported_error("enumerate_supports: n_limit > 25 refused (2^N blowup)");
  }
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("enumerate_supports: budget must be finite and >= 0");
  }

  std::vector<int> prefix;
  // Lexicographic depth-first walk: visit the current set, then extend with
  // every larger index that still fits the budget.
  auto walk = [&](auto&& self, int next, double acc) -> void {
    std::vector<int> indices = prefix;
    visit(SupportSet(std::move(indices)));
    for (int j = next; j < n_limit; ++j) {
      double grown = acc + w.squared(static_cast<std::size_t>(j));
      if (!fits_budget(grown, budget)) continue;
      prefix.push_back(j);
      self(self, j + 1, grown);
      prefix.pop_back();
    }
  };
  walk(walk, 0, 0.0);
}

std::vector<SupportSet> collect_supports(const WeightVector& w, double budget, int n_limit) {
  std::vector<SupportSet> out;
  enumerate_supports(w, budget, n_limit, [&](const SupportSet& s) { out.push_back(s); });
  return out;
}

}  // namespace wsa
