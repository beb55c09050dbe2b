#include "wsa/types.hpp"

#include <algorithm>
#include <cmath>

namespace wsa {
namespace {

// Neumaier compensated summation. Weighted cardinalities are accumulated this
// way so the result does not depend on summation order at the tested scales.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw dimension_error("WeightVector: length must be >= 1");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 1.0) {
      throw std::invalid_argument("WeightVector: every weight must be finite and >= 1");
    }
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  return WeightVector(std::vector<double>(n, 1.0));
}

WeightVector WeightVector::sqrt_index(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = std::sqrt(static_cast<double>(j + 1));
  return WeightVector(std::move(v));
}

double WeightVector::max_weight() const {
  return *std::max_element(values_.begin(), values_.end());
}

bool WeightVector::is_uniform() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 1.0; });
}

SupportSet::SupportSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) throw dimension_error("SupportSet: negative index");
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      throw dimension_error("SupportSet: duplicate index");
    }
  }
}

int SupportSet::max_index() const { return indices_.empty() ? -1 : indices_.back(); }

bool SupportSet::contains(int j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

SupportSet SupportSet::union_with(const SupportSet& other) const {
  std::vector<int> merged;
  merged.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  SupportSet out;
  out.indices_ = std::move(merged);
  return out;
}

SupportSet SupportSet::complement(int n) const {
  std::vector<int> comp;
  comp.reserve(static_cast<std::size_t>(n) - indices_.size());
  std::size_t k = 0;
  for (int j = 0; j < n; ++j) {
    if (k < indices_.size() && indices_[k] == j) {
      ++k;
    } else {
      comp.push_back(j);
    }
  }
  SupportSet out;
  out.indices_ = std::move(comp);
  return out;
}

double weighted_l0(const Signal& x, const WeightVector& w) {
  if (x.size() != w.size()) {
    throw dimension_error("weighted_l0: signal/weight length mismatch");
  }
  CompensatedSum acc;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0.0) acc.add(w.squared(j));
  }
  return acc.value();
}

double weighted_cardinality(const SupportSet& s, const WeightVector& w) {
  if (s.max_index() >= static_cast<int>(w.size())) {
    throw dimension_error("weighted_cardinality: index out of bounds");
  }
  CompensatedSum acc;
  for (int j : s) acc.add(w.squared(static_cast<std::size_t>(j)));
  return acc.value();
}

double weighted_lp(const Signal& x, const WeightVector& w, double p) {
  if (x.size() != w.size()) {
    throw dimension_error("weighted_lp: signal/weight length mismatch");
  }
  if (!(p > 0.0) || p > 2.0) {
    throw std::invalid_argument("weighted_lp: p must lie in (0, 2]");
  }
  CompensatedSum acc;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0.0) acc.add(std::pow(std::abs(x[j]), p) * std::pow(w[j], 2.0 - p));
  }
  return acc.value();
}

Signal restrict_to(const Signal& x, const SupportSet& s) {
  if (s.max_index() >= static_cast<int>(x.size())) {
    throw dimension_error("restrict_to: index out of bounds");
  }
  Signal out(x.size(), 0.0);
  for (int j : s) out[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  return out;
}

SupportSet support_of(const Signal& x) {
  std::vector<int> idx;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0.0) idx.push_back(static_cast<int>(j));
  }
  return SupportSet(std::move(idx));
}

double l2_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double t : v) acc += t * t;
  return std::sqrt(acc);
}

double l2_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw dimension_error("l2_distance: length mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw dimension_error("dot: length mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool all_finite(const std::vector<double>& v) {
  for (double t : v) {
    if (!std::isfinite(t)) return false;
  }
  return true;
}

}  // namespace wsa
