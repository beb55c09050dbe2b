#pragma once

#include <cstdint>
#include <string>

#include "wsa/combinatorics.hpp"
#include "wsa/types.hpp"

namespace wsa {

/// Dense m x N measurement matrix, row-major.
struct SensingMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;

  SensingMatrix() = default;
  SensingMatrix(int m, int n)
      : rows(m), cols(n),
        entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0.0) {
    if (m < 1 || n < 1) throw dimension_error("SensingMatrix: m, N must be >= 1");
  }

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }
  double& operator()(int i, int j) {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }

  // OpenMP kernels parallelize over independent output entries, so they are
  // bitwise identical to the serial references at any thread count.
  MeasurementVector forward(const Signal& x) const;
  MeasurementVector forward_serial(const Signal& x) const;
  Signal adjoint(const MeasurementVector& y) const;
  Signal adjoint_serial(const MeasurementVector& y) const;

  static SensingMatrix identity(int n);
  static SensingMatrix scaled_identity(int n, double factor);
};

// rip        — i.i.d. N(0, 1/m) entries, column norms concentrate near 1.
// spectral   — i.i.d. N(0, 1) entries rescaled so the spectral norm equals
//              the target c in (0, 1); used for the contraction regime.
enum class GaussianScaling { rip, spectral };

SensingMatrix gaussian_matrix(int m, int n, std::uint64_t seed, GaussianScaling scaling,
                              double spectral_target = 0.0);

/// Largest singular value by power iteration on A*A. Deterministic all-ones
/// start vector; relative tolerance tol; throws numerical_error if the
/// iteration cap is reached.
double spectral_norm(const SensingMatrix& a, double tol = 1e-12);

struct RipEstimate {
  double delta = 0.0;
  double order = 0.0;          // the budget the estimate certifies
  bool weighted = false;       // false when the weights are uniform
  BigCount supports_checked = 0;  // feasible supports within budget, empty set included
};

/// Exact restricted isometry constant by enumeration over feasible supports:
/// delta = max over I of max(lambda_max(G_I) - 1, 1 - lambda_min(G_I)) with
/// G_I the Gram matrix of the selected columns. Only weight-maximal supports
/// are evaluated (eigenvalue interlacing makes the rest redundant). Refused
/// for N > 25.
RipEstimate rip_constant(const SensingMatrix& a, const WeightVector& w, double budget);
RipEstimate rip_constant_serial(const SensingMatrix& a, const WeightVector& w, double budget);

/// Unweighted RIP of integer order s.
RipEstimate rip_constant_unweighted(const SensingMatrix& a, int s);

struct RipBoundsReport {
  int trials = 0;
  // one slot per inequality:
  //  [0] |<u, (I - A*A)v>| <= delta_{w,t} |u| |v|
  //  [1] |((I - A*A)v)_S|  <= delta_{w,t} |v|
  //  [2] |(A*y)_S|         <= sqrt(1 + delta_{w,s}) |y|
  int violations[3] = {0, 0, 0};
  double min_slack[3];  // min over trials of rhs - lhs

  bool clean() const { return violations[0] == 0 && violations[1] == 0 && violations[2] == 0; }
};

/// Randomized check of the three isometry inequalities with enumerated delta
/// values at the exact weighted cardinality each trial realizes. N <= 20.
RipBoundsReport check_rip_bounds(const SensingMatrix& a, const WeightVector& w, int trials,
                                 std::uint64_t seed);

}  // namespace wsa
