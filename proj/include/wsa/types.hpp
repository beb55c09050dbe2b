#pragma once

#include <cstddef>
#include <vector>

#include "wsa/errors.hpp"

namespace wsa {

// Dense real signal of length N. Entries are kept as plain doubles; finiteness
// is validated at I/O boundaries, not on every arithmetic step.
using Signal = std::vector<double>;

// Dense real sample vector of length m.
using MeasurementVector = std::vector<double>;

/// Per-atom weights. Every entry must be finite and >= 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> values);

  /// All-ones weights (the unweighted case).
  static WeightVector uniform(std::size_t n);

  /// w(j) = sqrt(j) for j = 1..n (1-based index convention).
  static WeightVector sqrt_index(std::size_t n);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double squared(std::size_t i) const { return values_[i] * values_[i]; }
  const std::vector<double>& values() const { return values_; }

  /// max_j w_j.
  double max_weight() const;

  bool is_uniform() const;

 private:
  std::vector<double> values_;
};

/// Sorted set of distinct atom indices.
class SupportSet {
 public:
  SupportSet() = default;
  /// Sorts the input; throws dimension_error on duplicates or negatives.
  explicit SupportSet(std::vector<int> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](std::size_t i) const { return indices_[i]; }
  int max_index() const;  // -1 when empty
  bool contains(int j) const;

  SupportSet union_with(const SupportSet& other) const;
  /// All indices in [0, n) not in this set.
  SupportSet complement(int n) const;

  bool operator==(const SupportSet& other) const = default;

  std::vector<int>::const_iterator begin() const { return indices_.begin(); }
  std::vector<int>::const_iterator end() const { return indices_.end(); }

 private:
  std::vector<int> indices_;
};

/// Sum of squared weights over the exact support of x (entries != 0.0).
double weighted_l0(const Signal& x, const WeightVector& w);

/// Sum of squared weights over an index set.
double weighted_cardinality(const SupportSet& s, const WeightVector& w);

/// Sum_{x_j != 0} |x_j|^p * w_j^(2-p), p in (0, 2]. No outer p-th root.
double weighted_lp(const Signal& x, const WeightVector& w, double p);

/// Full-length signal equal to x on S and zero elsewhere.
Signal restrict_to(const Signal& x, const SupportSet& s);

/// Indices of the exactly-nonzero entries of x.
SupportSet support_of(const Signal& x);

// Plain vector helpers shared across modules.
double l2_norm(const std::vector<double>& v);
double l2_distance(const std::vector<double>& a, const std::vector<double>& b);
double dot(const std::vector<double>& a, const std::vector<double>& b);
bool all_finite(const std::vector<double>& v);

}  // namespace wsa
