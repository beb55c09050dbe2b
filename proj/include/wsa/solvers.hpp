#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wsa/sensing.hpp"
#include "wsa/thresholding.hpp"
#include "wsa/types.hpp"

namespace wsa {

struct SolverConfig {
  int max_iters = 500;
  double halt_tol = 1e-10;  // halt when ||x^{n+1} - x^n||_2 <= halt_tol
  ProjectionMode projection = ProjectionMode::surrogate;
  double step_size = 1.0;
  Signal x0;                   // empty = start from zero
  bool store_iterates = true;  // sweeps switch this off to keep memory flat
};

/// Per-iteration record. Entry n covers the iterate x^n, starting at x^0 = 0.
struct SolverTrace {
  std::vector<Signal> iterates;        // empty when store_iterates is off
  std::vector<double> objectives;      // f(x^n) = 0.5 ||y - A x^n||^2
  std::vector<double> residual_norms;  // ||y - A x^n||
  std::vector<SupportSet> supports;    // supp(x^n)
  Signal final_iterate;
  int iterations = 0;          // gradient/selection steps taken
  bool converged = false;      // halt_tol reached
  bool diverged = false;       // iterate left the finite range
  bool ridge_fallback = false; // a least-squares step needed the ridge

  std::size_t length() const { return objectives.size(); }
};

/// Unweighted iterative hard thresholding:
/// x^{n+1} = H_s(x^n + step * A*(y - A x^n)), x^0 = 0.
SolverTrace iht(const SensingMatrix& a, const MeasurementVector& y, int s,
                const SolverConfig& cfg = {});

/// Weighted variant: the projection is the weighted thresholding operator
/// selected by cfg.projection. With uniform weights and integer budget the
/// trace is element-wise identical to iht (shared loop and tie rules).
SolverTrace ihwt(const SensingMatrix& a, const MeasurementVector& y, const WeightVector& w,
                 double budget, const SolverConfig& cfg = {});

/// CoSaMP: proxy top-2s merge, least squares on the merged support, prune to
/// top-s. Requires 3s <= N.
SolverTrace cosamp(const SensingMatrix& a, const MeasurementVector& y, int s,
                   const SolverConfig& cfg = {});

/// Orthogonal matching pursuit: s greedy atom picks by max |A* r|, least
/// squares on the selected set each step.
SolverTrace omp(const SensingMatrix& a, const MeasurementVector& y, int s,
                const SolverConfig& cfg = {});

/// Majorizing surrogate g(x, z) = 0.5||y - Ax||^2 - ||A(x-z)||^2 + ||x-z||^2.
double mm_surrogate(const SensingMatrix& a, const MeasurementVector& y, const Signal& x,
                    const Signal& z);

struct DescentReport {
  double spectral_norm = 0.0;
  bool objective_nonincreasing = true;
  bool interleaving_ok = true;  // f(x^{n+1}) <= g(x^{n+1}, x^n) <= f(x^n)
  bool sum_bound_ok = true;     // sum ||x^{i+1}-x^i||^2 <= f(x^0)/(1 - ||A||^2)
  double max_objective_increase = 0.0;
  double worst_interleave_gap = 0.0;
  double partial_sum = 0.0;
  double partial_sum_bound = 0.0;

  bool all_ok() const { return objective_nonincreasing && interleaving_ok && sum_bound_ok; }
};

/// Checks the contraction-regime descent properties on a stored trace. The
/// trace must carry iterates and the matrix must satisfy ||A||_2 < 1.
DescentReport descent_diagnostics(const SolverTrace& trace, const SensingMatrix& a,
                                  const MeasurementVector& y);

enum class BoundVariant { general, weighted_l1 };

struct BoundReport {
  std::vector<double> lhs;  // ||x - x^n||_2 per iteration
  std::vector<double> rhs;  // chosen bound per iteration
  bool satisfied = true;
  std::map<std::string, double> components;  // named error-floor terms
};

/// Evaluates the per-iteration recovery bound on a stored trace.
/// general:     rhs_n = 2^-n ||x^s|| + ||x - x^s|| + 4.34 ||A(x - x^s) + e||
/// weighted_l1: rhs_n = 2^-n ||x^s|| + 6 (||x - x^s|| + (2/sqrt(s))||x - x^s||_{w,1} + ||e||)
/// Preconditions: delta_3s < 1/sqrt(32); the weighted_l1 variant additionally
/// needs budget >= 2 max(w)^2.
BoundReport recovery_bound(const SolverTrace& trace, const SensingMatrix& a,
                          const Signal& x_true, const Signal& x_best,
                          const MeasurementVector& noise, double delta_3s,
                          const WeightVector& w, double budget, BoundVariant variant);

struct EnergyBoundReport {
  int trials = 0;
  int violations = 0;
  double min_slack = 0.0;
  double delta = 0.0;

  bool clean() const { return violations == 0; }
};

/// Randomized check of ||Ax||_2 <= sqrt(1 + delta_{w,s}) (||x||_2 +
/// (2/sqrt(s)) ||x||_{w,1}) for dense x, with delta certified by enumeration.
/// Requires budget >= 2 max(w)^2.
EnergyBoundReport weighted_energy_bound_check(const SensingMatrix& a, const WeightVector& w,
                                              double budget, int trials, std::uint64_t seed);

}  // namespace wsa
