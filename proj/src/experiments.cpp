#include "wsa/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wsa/rng.hpp"
#include "wsa/signal_models.hpp"

namespace wsa {

double normalized_error(const Signal& x_best, const Signal& x_approx,
                        const MeasurementVector& noise) {
  double noise_norm = l2_norm(noise);
  if (noise_norm == 0.0) {
    throw std::domain_error("normalized_error: undefined for ||e|| == 0; "
                            "use the exact-recovery metric for noiseless runs");
  }
  return l2_distance(x_best, x_approx) / noise_norm;
}

bool exact_recovery(const Signal& x_true, const Signal& x_approx, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("exact_recovery: tol must be > 0");
  return l2_distance(x_true, x_approx) <= tol;
}

namespace {

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (cfg.n < 1) throw std::invalid_argument("experiment: N must be >= 1");
  if (cfg.m_values.empty() || cfg.s_values.empty()) {
    throw std::invalid_argument("experiment: sweep lists must be nonempty");
  }
  if (!std::is_sorted(cfg.m_values.begin(), cfg.m_values.end()) ||
      !std::is_sorted(cfg.s_values.begin(), cfg.s_values.end())) {
    throw std::invalid_argument("experiment: sweep lists must be increasing");
  }
  if (cfg.solvers.empty()) throw std::invalid_argument("experiment: no solvers selected");
  for (const std::string& name : cfg.solvers) {
    if (name != "ihwt" && name != "iht" && name != "cosamp" && name != "omp") {
      throw std::invalid_argument("experiment: unknown solver '" + name + "'");
    }
  }
  if (cfg.sigma < 0.0) throw std::invalid_argument("experiment: sigma must be >= 0");
}

SolverConfig solver_config(const ExperimentConfig& cfg) {
  SolverConfig sc;
  sc.max_iters = cfg.max_iters;
  sc.halt_tol = cfg.halt_tol;
  sc.projection = cfg.projection;
  sc.store_iterates = false;
  return sc;
}

Signal run_one_solver(const std::string& name, const SensingMatrix& a,
                      const MeasurementVector& y, const WeightVector& w, int s,
                      const SolverConfig& sc, int* iterations) {
  SolverTrace trace;
  if (name == "ihwt") {
    trace = ihwt(a, y, w, static_cast<double>(s), sc);
  } else if (name == "iht") {
    trace = iht(a, y, s, sc);
  } else if (name == "cosamp") {
    trace = cosamp(a, y, s, sc);
  } else {
    trace = omp(a, y, s, sc);
  }
  *iterations = trace.iterations;
  return trace.final_iterate;
}

// One (sweep point, trial) cell: shared instance, one result row per solver.
// The RNG stream is keyed by (seed, point, trial) so execution order and
// thread count never change the data.
void run_trial(const ExperimentConfig& cfg, bool sweep_is_s, int point_idx, int trial_idx,
               bool noisy, std::vector<TrialResult>& out_rows) {
  const int s = sweep_is_s ? cfg.s_values[static_cast<std::size_t>(point_idx)]
                           : cfg.s_values.front();
  const int m = sweep_is_s ? cfg.m_values.front()
                           : cfg.m_values[static_cast<std::size_t>(point_idx)];

  std::mt19937_64 rng = seeded_engine(
      derive_seed(cfg.seed, static_cast<std::uint64_t>(point_idx),
                  static_cast<std::uint64_t>(trial_idx)));

  PowerLawParams params =
      random_power_law_params(rng, {cfg.a_min, cfg.a_max}, {cfg.b_min, cfg.b_max}, cfg.n);
  Signal dense = power_law_signal(params);
  Signal x_best = sparse_truncate(dense, s);

  std::uint64_t matrix_seed = rng();
  SensingMatrix a =
      cfg.scaling == MatrixScaling::rip
          ? gaussian_matrix(m, cfg.n, matrix_seed, GaussianScaling::rip)
          : gaussian_matrix(m, cfg.n, matrix_seed, GaussianScaling::spectral,
                            cfg.spectral_target);

  MeasurementVector y;
  MeasurementVector noise;
  if (noisy) {
    noise = gaussian_noise(m, cfg.sigma, rng());
    y = a.forward_serial(dense);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += noise[i];
  } else {
    y = a.forward_serial(x_best);
  }

  WeightVector w = block_weights(cfg.n, s);
  SolverConfig sc = solver_config(cfg);

  for (std::size_t k = 0; k < cfg.solvers.size(); ++k) {
    TrialResult row;
    row.solver = cfg.solvers[k];
    row.sweep_param = sweep_is_s ? "s" : "m";
    row.sweep_value = sweep_is_s ? s : m;
    double t0 = omp_get_wtime();
    int iters = 0;
    Signal approx = run_one_solver(row.solver, a, y, w, s, sc, &iters);
    row.wall_time_seconds = omp_get_wtime() - t0;
    row.iterations = iters;
    if (noisy) {
      row.error = normalized_error(x_best, approx, noise);
      row.recovered = exact_recovery(x_best, approx, cfg.recovery_tol);
    } else {
      row.error = l2_distance(x_best, approx);
      row.recovered = exact_recovery(x_best, approx, cfg.recovery_tol);
    }
    out_rows[k] = std::move(row);
  }
}

AggregateResult run_sweep(const ExperimentConfig& cfg, bool sweep_is_s, bool noisy) {
  validate_config(cfg);
  if (noisy && cfg.sigma <= 0.0) {
    throw std::invalid_argument("experiment: noisy protocol needs sigma > 0");
  }
  if (!noisy && cfg.sigma != 0.0) {
    throw std::invalid_argument("experiment: exact-recovery protocol needs sigma == 0");
  }
  const std::vector<int>& sweep = sweep_is_s ? cfg.s_values : cfg.m_values;
  for (int s : cfg.s_values) {
    if (s < 1 || 2 * s >= cfg.n) {
      throw std::invalid_argument("experiment: block weights need 1 <= s and 2s < N");
    }
  }

  const int points = static_cast<int>(sweep.size());
  const int solvers = static_cast<int>(cfg.solvers.size());
  std::vector<TrialResult> results(
      static_cast<std::size_t>(points) * static_cast<std::size_t>(cfg.trials) *
      static_cast<std::size_t>(solvers));

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  const int cells = points * cfg.trials;
#pragma omp parallel for schedule(dynamic)
  for (int cell = 0; cell < cells; ++cell) {
    int point_idx = cell / cfg.trials;
    int trial_idx = cell % cfg.trials;
    std::vector<TrialResult> rows(static_cast<std::size_t>(solvers));
    run_trial(cfg, sweep_is_s, point_idx, trial_idx, noisy, rows);
    std::size_t base = static_cast<std::size_t>(cell) * static_cast<std::size_t>(solvers);
    for (int k = 0; k < solvers; ++k) {
      results[base + static_cast<std::size_t>(k)] = std::move(rows[static_cast<std::size_t>(k)]);
    }
  }
  return aggregate(results, cfg.solvers, noisy);
}

}  // namespace

AggregateResult run_sparsity_sweep(const ExperimentConfig& cfg) {
  return run_sweep(cfg, /*sweep_is_s=*/true, /*noisy=*/false);
}

AggregateResult run_measurement_sweep(const ExperimentConfig& cfg) {
  return run_sweep(cfg, /*sweep_is_s=*/false, /*noisy=*/false);
}

AggregateResult run_noisy_sparsity_sweep(const ExperimentConfig& cfg) {
  return run_sweep(cfg, /*sweep_is_s=*/true, /*noisy=*/true);
}

AggregateResult run_noisy_measurement_sweep(const ExperimentConfig& cfg) {
  return run_sweep(cfg, /*sweep_is_s=*/false, /*noisy=*/true);
}

AggregateResult aggregate(const std::vector<TrialResult>& results,
                          const std::vector<std::string>& solver_order, bool noisy) {
  if (results.empty()) throw std::invalid_argument("aggregate: no trial results");

  AggregateResult agg;
  agg.noisy = noisy;

  // Sweep values in first-seen order (the runner generates them sorted).
  std::vector<int> sweep_values;
  for (const TrialResult& r : results) {
    if (std::find(sweep_values.begin(), sweep_values.end(), r.sweep_value) ==
        sweep_values.end()) {
      sweep_values.push_back(r.sweep_value);
    }
  }

  for (const std::string& solver : solver_order) {
    for (int value : sweep_values) {
      std::vector<double> errors;
      int recovered = 0;
      std::string sweep_param;
      for (const TrialResult& r : results) {
        if (r.solver != solver || r.sweep_value != value) continue;
        sweep_param = r.sweep_param;
        errors.push_back(r.error);
        if (r.recovered) ++recovered;
      }
      if (errors.empty()) {
        std::fprintf(stderr, "aggregate: no trials for solver %s at sweep value %d, skipping\n",
                     solver.c_str(), value);
        continue;
      }

      AggregatePoint point;
      point.solver = solver;
      point.sweep_param = sweep_param;
      point.sweep_value = value;
      point.trials = static_cast<int>(errors.size());
      point.recovery_probability =
          static_cast<double>(recovered) / static_cast<double>(errors.size());

      if (noisy) {
        double log_sum = 0.0;
        for (double e : errors) log_sum += std::log10(std::max(e, 1e-300));
        point.mean_log_error = log_sum / static_cast<double>(errors.size());

        if (errors.size() >= 2) {
          double mean = 0.0;
          for (double e : errors) mean += e;
          mean /= static_cast<double>(errors.size());
          double var = 0.0;
          for (double e : errors) var += (e - mean) * (e - mean);
          var /= static_cast<double>(errors.size() - 1);
          double std_dev = std::sqrt(var);
          point.log_std_error = std_dev == 0.0
                                    ? -std::numeric_limits<double>::infinity()
                                    : std::log10(std_dev);
        }  // single trial: std undefined, marker stays absent
      }
      agg.points.push_back(std::move(point));
    }
  }
  return agg;
}

ExperimentConfig protocol_preset(const std::string& name) {
  ExperimentConfig cfg;
  auto steps = [](int from, int to, int by) {
    std::vector<int> v;
    for (int x = from; x <= to; x += by) v.push_back(x);
    return v;
  };
  if (name == "fig1") {  // exact recovery, m fixed, sparsity sweep
    cfg.m_values = {128};
    cfg.s_values = steps(5, 50, 5);
    cfg.sigma = 0.0;
  } else if (name == "fig2") {  // exact recovery, s fixed, measurement sweep
    cfg.s_values = {25};
    cfg.m_values = steps(5, 100, 5);
    cfg.sigma = 0.0;
  } else if (name == "fig3" || name == "fig4") {  // noisy, m fixed, sparsity sweep
    cfg.m_values = {128};
    cfg.s_values = steps(5, 50, 5);
    cfg.sigma = 0.01;
  } else if (name == "fig5" || name == "fig6") {  // noisy, s fixed, measurement sweep
    cfg.s_values = {25};
    cfg.m_values = steps(5, 100, 5);
    cfg.sigma = 0.01;
  } else {
    throw std::invalid_argument("protocol_preset: unknown protocol '" + name + "'");
  }
  return cfg;
}

AggregateResult run_experiment(const ExperimentConfig& cfg) {
  bool noisy = cfg.sigma > 0.0;
  bool sweep_is_s = cfg.s_values.size() > 1 || cfg.m_values.size() == 1;
  if (noisy) {
    return sweep_is_s ? run_noisy_sparsity_sweep(cfg) : run_noisy_measurement_sweep(cfg);
  }
  return sweep_is_s ? run_sparsity_sweep(cfg) : run_measurement_sweep(cfg);
}

}  // namespace wsa
