#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsa/solvers.hpp"
#include "wsa/types.hpp"

namespace wsa {

enum class MatrixScaling { rip, spectral };

struct ExperimentConfig {
  int n = 256;
  std::vector<int> m_values = {128};
  std::vector<int> s_values = {25};
  int trials = 200;
  std::uint64_t seed = 1;
  std::vector<std::string> solvers = {"ihwt", "iht", "cosamp", "omp"};
  double sigma = 0.0;  // per-coordinate noise std; 0 = noiseless exact-recovery protocol
  ProjectionMode projection = ProjectionMode::surrogate;
  double recovery_tol = 1e-4;
  int max_iters = 500;
  double halt_tol = 1e-10;
  // Step-1 gradient iterations need ||A||_2 < 1 to stay stable, so the
  // recovery protocols draw spectrally rescaled ensembles by default.
  MatrixScaling scaling = MatrixScaling::spectral;
  double spectral_target = 0.99;
  int a_min = 1, a_max = 10;  // power-law amplitude range
  int b_min = 1, b_max = 3;   // power-law decay range
  int threads = 0;            // 0 = library default
};

struct TrialResult {
  std::string solver;
  std::string sweep_param;  // "s" or "m"
  int sweep_value = 0;
  double error = 0.0;  // normalized error (noisy) or plain l2 distance (noiseless)
  bool recovered = false;
  int iterations = 0;
  double wall_time_seconds = 0.0;
};

struct AggregatePoint {
  std::string solver;
  std::string sweep_param;
  int sweep_value = 0;
  int trials = 0;
  double recovery_probability = 0.0;
  std::optional<double> mean_log_error;  // log10; noisy protocols only
  std::optional<double> log_std_error;   // log10 of sample std; -inf when std == 0
};

struct AggregateResult {
  std::vector<AggregatePoint> points;
  bool noisy = false;  // which metric family the protocol produced
};

/// ||x_best - x_approx||_2 / ||e||_2. Throws when ||e||_2 == 0.
double normalized_error(const Signal& x_best, const Signal& x_approx,
                        const MeasurementVector& noise);

/// ||x_approx - x_true||_2 <= tol (inclusive).
bool exact_recovery(const Signal& x_true, const Signal& x_approx, double tol);

/// Noiseless exact-recovery sweeps: fresh Gaussian matrix and power-law
/// signal per trial, truncated to the sparsity level; every configured solver
/// sees the same (A, x, y).
AggregateResult run_sparsity_sweep(const ExperimentConfig& cfg);
AggregateResult run_measurement_sweep(const ExperimentConfig& cfg);

/// Noisy protocols: dense power-law signal, y = A x + e, normalized error
/// against the best s-sparse approximation.
AggregateResult run_noisy_sparsity_sweep(const ExperimentConfig& cfg);
AggregateResult run_noisy_measurement_sweep(const ExperimentConfig& cfg);

/// Groups trial results by (solver, sweep value) in the order the trials were
/// generated; deterministic for a fixed config regardless of thread count.
AggregateResult aggregate(const std::vector<TrialResult>& results,
                          const std::vector<std::string>& solver_order, bool noisy);

/// Named presets for the benchmark protocols (fig1..fig6).
ExperimentConfig protocol_preset(const std::string& name);

/// Runs the protocol implied by the config: noiseless sweeps when sigma == 0,
/// noisy otherwise; the sweep axis is whichever of m/s has multiple values
/// (s wins ties).
AggregateResult run_experiment(const ExperimentConfig& cfg);

}  // namespace wsa
