#pragma once

#include <string>

#include "wsa/experiments.hpp"
#include "wsa/sensing.hpp"
#include "wsa/solvers.hpp"
#include "wsa/types.hpp"

namespace wsa {

/// Shortest decimal form that round-trips a double ("%.17g" fallback).
std::string format_double(double v);

// Signals and weights travel as single-column CSV with a "value" header.
void write_signal_csv(const std::string& path, const Signal& x);
Signal read_signal_csv(const std::string& path);

// Matrices are plain comma-separated rows, no header.
void write_matrix_csv(const std::string& path, const SensingMatrix& a);
SensingMatrix read_matrix_csv(const std::string& path);

/// Trace CSV: one row per iterate with objective, residual norm, support
/// size and weighted support size; iterate entries x_1..x_N are appended
/// when the trace stored them.
void write_trace_csv(const std::string& path, const SolverTrace& trace,
                     const WeightVector& w);

/// Aggregate CSV with the config echoed as '#'-prefixed header lines.
/// Schema: solver,sweep_param,sweep_value,metric,value,trials,seed
std::string aggregate_csv_string(const AggregateResult& agg, const ExperimentConfig& cfg);
void write_aggregate_csv(const std::string& path, const AggregateResult& agg,
                         const ExperimentConfig& cfg);
AggregateResult read_aggregate_csv(const std::string& path);

// Flat key = value config files; '#' comments; lists comma-separated and
// ranges as "lo..hi". parse errors carry the 1-based line number.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_string(const std::string& text);
/// Applies config text on top of an existing config (presets + file layering).
void apply_config_text(ExperimentConfig& cfg, const std::string& text);
std::string serialize_config(const ExperimentConfig& cfg);
/// Applies one "key=value" override on top of an existing config.
void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value);

}  // namespace wsa
