#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "wsa/types.hpp"

namespace wsa {

// Exact arbitrary-precision count; support-set counts overflow 64 bits well
// before budget 1000 with sqrt-index weights.
using BigCount = mpz_class;

enum class CountMode { exact, at_most };

// Budget feasibility test with a relative 1e-12 slack to absorb float
// accumulation. The integer DP paths never use it.
inline bool fits_budget(double accumulated, double budget) {
  return accumulated <= budget + 1e-12 * budget;
}

/// Largest |I| over index sets I with weighted cardinality <= budget.
/// Greedy over ascending weights; optimal since all weights are positive.
int max_support_size(const WeightVector& w, double budget);

/// If every squared weight is within 1e-9 of an integer, returns them rounded;
/// otherwise nullopt. Gate for the DP paths here and in thresholding.
std::optional<std::vector<long long>> integer_squared_weights(const WeightVector& w);

/// Number of index sets I (the empty set included) with weighted cardinality
/// == budget (exact) or <= budget (at_most). Integer squared weights use a
/// subset-sum DP; otherwise falls back to enumeration for size() <= 25 and
/// refuses beyond that.
BigCount count_supports(const WeightVector& w, double budget, CountMode mode);

/// Visits every I subset of [0, n_limit) with weighted cardinality <= budget,
/// each exactly once, in lexicographic order, depth-first with pruning.
/// n_limit > 25 is refused.
void enumerate_supports(const WeightVector& w, double budget, int n_limit,
                        const std::function<void(const SupportSet&)>& visit);

/// Materialized convenience wrapper around enumerate_supports.
std::vector<SupportSet> collect_supports(const WeightVector& w, double budget, int n_limit);

}  // namespace wsa
