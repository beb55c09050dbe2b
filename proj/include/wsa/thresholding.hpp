#pragma once

#include "wsa/types.hpp"

namespace wsa {

// exact_dp     — 0/1 knapsack DP; requires integer squared weights.
// exact_enum   — exhaustive search; requires N <= 25.
// surrogate    — sort by |x_j|/w_j and greedily fill the weight budget.
enum class ProjectionMode { exact_dp, exact_enum, surrogate };

/// Keep the s entries of largest magnitude, zero the rest. Ties keep the
/// lower index. Minimizes ||x - z||_2 over ||z||_0 <= s.
Signal hard_threshold(const Signal& x, int s);

/// l2 projection onto the weighted-sparse set { z : ||z||_{w,0} <= budget }.
/// Maximizes the captured energy sum of x_j^2 over feasible supports; among
/// equal-value solutions the lexicographically smallest support wins.
Signal exact_weighted_threshold(const Signal& x, const WeightVector& w, double budget,
                                ProjectionMode mode);

/// Greedy surrogate: scan indices by descending |x_j|/w_j (ties by lower
/// index), admitting each index whose squared weight still fits the budget.
/// Indices that do not fit are skipped and scanning continues.
/// stop_at_first_misfit switches to the prefix-stop variant for comparison.
Signal surrogate_weighted_threshold(const Signal& x, const WeightVector& w, double budget,
                                    bool stop_at_first_misfit = false);

/// Euclidean distance ||x - z||_2.
double projection_error(const Signal& x, const Signal& z);

/// Energy captured by a support: sum of x_j^2 over S in ascending index
/// order. The knapsack objective; exactness tests compare it across
/// projection routes, so the accumulation order is part of the contract.
double captured_energy(const Signal& x, const SupportSet& s);

/// Selects the projection by mode.
Signal weighted_project(const Signal& x, const WeightVector& w, double budget,
                        ProjectionMode mode);

}  // namespace wsa
