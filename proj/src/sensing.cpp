#include "wsa/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "wsa/linalg.hpp"
#include "wsa/rng.hpp"

namespace wsa {

SensingMatrix SensingMatrix::identity(int n) { return scaled_identity(n, 1.0); }

SensingMatrix SensingMatrix::scaled_identity(int n, double factor) {
  SensingMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = factor;
  return a;
}

SensingMatrix gaussian_matrix(int m, int n, std::uint64_t seed, GaussianScaling scaling,
                              double spectral_target) {
  SensingMatrix a(m, n);
  std::mt19937_64 rng = seeded_engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& e : a.entries) e = normal(rng);

  if (scaling == GaussianScaling::rip) {
    const double stddev = 1.0 / std::sqrt(static_cast<double>(m));
    for (double& e : a.entries) e *= stddev;
  } else {
    if (!(spectral_target > 0.0) || spectral_target >= 1.0) {
      throw std::invalid_argument("gaussian_matrix: spectral target must lie in (0, 1)");
    }
    const double norm = spectral_norm(a, 1e-13);
    const double factor = spectral_target / norm;
    for (double& e : a.entries) e *= factor;
  }
  return a;
}

MeasurementVector SensingMatrix::forward_serial(const Signal& x) const {
  if (static_cast<int>(x.size()) != cols) {
    throw dimension_error("forward: signal length != matrix columns");
  }
  MeasurementVector y(static_cast<std::size_t>(rows), 0.0);
  for (int i = 0; i < rows; ++i) {
    const double* row = &entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols)];
    double acc = 0.0;
    for (int j = 0; j < cols; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

MeasurementVector SensingMatrix::forward(const Signal& x) const {
  if (static_cast<int>(x.size()) != cols) {
    throw dimension_error("forward: signal length != matrix columns");
  }
  MeasurementVector y(static_cast<std::size_t>(rows), 0.0);
  // below ~16k madds the fork/join overhead outweighs the work
  const bool par = static_cast<long long>(rows) * cols >= 16384;
#pragma omp parallel for schedule(static) if (par)
  for (int i = 0; i < rows; ++i) {
    const double* row = &entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols)];
    double acc = 0.0;
    for (int j = 0; j < cols; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

Signal SensingMatrix::adjoint_serial(const MeasurementVector& y) const {
  if (static_cast<int>(y.size()) != rows) {
    throw dimension_error("adjoint: vector length != matrix rows");
  }
  const SensingMatrix& a = *this;
  Signal x(static_cast<std::size_t>(cols), 0.0);
  for (int j = 0; j < cols; ++j) {
    double acc = 0.0;
    for (int i = 0; i < rows; ++i) acc += a(i, j) * y[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(j)] = acc;
  }
  return x;
}

Signal SensingMatrix::adjoint(const MeasurementVector& y) const {
  if (static_cast<int>(y.size()) != rows) {
    throw dimension_error("adjoint: vector length != matrix rows");
  }
  const SensingMatrix& a = *this;
  Signal x(static_cast<std::size_t>(cols), 0.0);
  const bool par = static_cast<long long>(rows) * cols >= 16384;
#pragma omp parallel for schedule(static) if (par)
  for (int j = 0; j < cols; ++j) {
    double acc = 0.0;
    for (int i = 0; i < rows; ++i) acc += a(i, j) * y[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(j)] = acc;
  }
  return x;
}

double spectral_norm(const SensingMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_norm: tol must be > 0");
  Signal v(static_cast<std::size_t>(a.cols), 1.0 / std::sqrt(static_cast<double>(a.cols)));
  double sigma = 0.0;
  const int max_iters = 200000;
  for (int it = 0; it < max_iters; ++it) {
    MeasurementVector av = a.forward_serial(v);
    Signal atav = a.adjoint_serial(av);
    double lambda = dot(v, atav);  // Rayleigh quotient for A*A
    double norm = l2_norm(atav);
    if (norm == 0.0) return 0.0;  // start vector in the null space => zero map or done
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = atav[j] / norm;
    double sigma_new = std::sqrt(std::max(lambda, 0.0));
    if (it > 0 && std::abs(sigma_new - sigma) <= tol * std::max(sigma_new, 1e-300)) {
      return sigma_new;
    }
    sigma = sigma_new;
  }
  throw numerical_error("spectral_norm: power iteration did not converge");
}

namespace {

// delta contribution of one column subset via its Gram matrix.
double subset_delta(const SensingMatrix& a, const std::vector<int>& cols) {
  const int k = static_cast<int>(cols.size());
  std::vector<double> gram(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    for (int q = p; q < k; ++q) {
      double acc = 0.0;
      for (int i = 0; i < a.rows; ++i) acc += a(i, cols[static_cast<std::size_t>(p)]) *
                                               a(i, cols[static_cast<std::size_t>(q)]);
      gram[static_cast<std::size_t>(p) * static_cast<std::size_t>(k) +
           static_cast<std::size_t>(q)] = acc;
      gram[static_cast<std::size_t>(q) * static_cast<std::size_t>(k) +
           static_cast<std::size_t>(p)] = acc;
    }
  }
  std::vector<double> eigs = symmetric_eigenvalues(std::move(gram), k);
  return std::max(eigs.back() - 1.0, 1.0 - eigs.front());
}

struct RipWalkResult {
  double delta = 0.0;
  long long supports = 0;  // feasible supports seen, empty set included
};

// Depth-first over supports within budget that contain `first`. Only
// weight-maximal supports get their Gram eigenvalues computed: adding a column
// can only widen the spectrum (eigenvalue interlacing), so maximal supports
// dominate the max.
RipWalkResult rip_walk_from(const SensingMatrix& a, const WeightVector& w, double budget,
                            int first) {
  RipWalkResult result;
  const int n = a.cols;
  std::vector<int> prefix = {first};

  auto is_maximal = [&](double acc) {
    for (int j = 0; j < n; ++j) {
      if (std::binary_search(prefix.begin(), prefix.end(), j)) continue;
      if (fits_budget(acc + w.squared(static_cast<std::size_t>(j)), budget)) return false;
    }
    return true;
  };

  auto walk = [&](auto&& self, int next, double acc) -> void {
    ++result.supports;
    if (is_maximal(acc)) {
      result.delta = std::max(result.delta, subset_delta(a, prefix));
    }
    for (int j = next; j < n; ++j) {
      double grown = acc + w.squared(static_cast<std::size_t>(j));
      if (!fits_budget(grown, budget)) continue;
      prefix.push_back(j);
      self(self, j + 1, grown);
      prefix.pop_back();
    }
  };

  double base = w.squared(static_cast<std::size_t>(first));
  if (fits_budget(base, budget)) walk(walk, first + 1, base);
  return result;
}

RipEstimate rip_constant_impl(const SensingMatrix& a, const WeightVector& w, double budget,
                              bool parallel) {
  if (static_cast<int>(w.size()) != a.cols) {
    throw dimension_error("rip_constant: weight length != matrix columns");
  }
  if (a.cols > 25) {
    throw unsupported_error("rip_constant: enumeration-backed estimation refused for N > 25");
  }
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("rip_constant: budget must be finite and >= 0");
  }

  RipEstimate est;
  est.order = budget;
  est.weighted = !w.is_uniform();

  double delta = 0.0;
  long long supports = 1;  // the empty set
#pragma omp parallel for schedule(dynamic) reduction(max : delta) reduction(+ : supports) \
    if (parallel)
  for (int first = 0; first < a.cols; ++first) {
    RipWalkResult r = rip_walk_from(a, w, budget, first);
    delta = std::max(delta, r.delta);
    supports += r.supports;
  }
  est.delta = delta;
  est.supports_checked = static_cast<long>(supports);
  return est;
}

}  // namespace

RipEstimate rip_constant(const SensingMatrix& a, const WeightVector& w, double budget) {
  return rip_constant_impl(a, w, budget, true);
}

RipEstimate rip_constant_serial(const SensingMatrix& a, const WeightVector& w, double budget) {
  return rip_constant_impl(a, w, budget, false);
}

RipEstimate rip_constant_unweighted(const SensingMatrix& a, int s) {
  return rip_constant(a, WeightVector::uniform(static_cast<std::size_t>(a.cols)),
                      static_cast<double>(s));
}

namespace {

Signal random_sparse_signal(int n, const SupportSet& support, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Signal x(static_cast<std::size_t>(n), 0.0);
  for (int j : support) x[static_cast<std::size_t>(j)] = normal(rng);
  return x;
}

SupportSet random_support(int n, int max_size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  int size = size_dist(rng);
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) pool[static_cast<std::size_t>(j)] = j;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(size));
  return SupportSet(std::move(pool));
}

}  // namespace

RipBoundsReport check_rip_bounds(const SensingMatrix& a, const WeightVector& w, int trials,
                                 std::uint64_t seed) {
  if (a.cols > 20) {
    throw unsupported_error("check_rip_bounds: N <= 20 required");
  }
  if (static_cast<int>(w.size()) != a.cols) {
    throw dimension_error("check_rip_bounds: weight length != matrix columns");
  }
  const int n = a.cols;
  std::mt19937_64 rng = seeded_engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  // delta_{w,t} is shared across trials that realize the same cardinality.
  std::map<double, double> delta_cache;
  auto delta_at = [&](double t) {
    auto it = delta_cache.find(t);
    if (it != delta_cache.end()) return it->second;
    double d = rip_constant(a, w, t).delta;
    delta_cache.emplace(t, d);
    return d;
  };

  RipBoundsReport report;
  report.trials = trials;
  for (double& s : report.min_slack) s = std::numeric_limits<double>::infinity();

  const int max_atoms = std::max(1, n / 6);
  for (int trial = 0; trial < trials; ++trial) {
    SupportSet su = random_support(n, max_atoms, rng);
    SupportSet sv = random_support(n, max_atoms, rng);
    SupportSet ss = random_support(n, max_atoms, rng);
    Signal u = random_sparse_signal(n, su, rng);
    Signal v = random_sparse_signal(n, sv, rng);
    MeasurementVector y(static_cast<std::size_t>(a.rows));
    for (double& e : y) e = normal(rng);

    // (I - A*A)v, shared by the first two inequalities
    MeasurementVector av = a.forward_serial(v);
    Signal atav = a.adjoint_serial(av);
    Signal residual(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) residual[j] = v[j] - atav[j];

    auto record = [&](int which, double lhs, double rhs) {
      double slack = rhs - lhs;
      report.min_slack[which] = std::min(report.min_slack[which], slack);
      if (lhs > rhs) ++report.violations[which];
    };

    {
      double t = weighted_cardinality(support_of(u).union_with(support_of(v)), w);
      double lhs = std::abs(dot(u, residual));
      double rhs = delta_at(t) * l2_norm(u) * l2_norm(v);
      record(0, lhs, rhs);
    }
    {
      double t = weighted_cardinality(ss.union_with(support_of(v)), w);
      double lhs = l2_norm(restrict_to(residual, ss));
      double rhs = delta_at(t) * l2_norm(v);
      record(1, lhs, rhs);
    }
    {
      double s = weighted_cardinality(ss, w);
      Signal aty = a.adjoint_serial(y);
      double lhs = l2_norm(restrict_to(aty, ss));
      double rhs = std::sqrt(1.0 + delta_at(s)) * l2_norm(y);
      record(2, lhs, rhs);
    }
  }
  return report;
}

}  // namespace wsa
