#pragma once

#include <string>

#include "wsa/experiments.hpp"

namespace wsa {

/// Standalone SVG 1.1 line chart: one polyline per solver over the sweep
/// axis, colors assigned deterministically by solver name. metric is one of
/// recovery_prob, mean_log_error, log_std_error. Points whose value is not
/// finite (the -inf std sentinel) are drawn as axis-edge markers and excluded
/// from the polyline. A solver with a single point gets a marker, no
/// polyline. Output bytes are a pure function of the input.
std::string render_plot_svg(const AggregateResult& agg, const std::string& metric);

void emit_plot(const AggregateResult& agg, const std::string& metric,
               const std::string& out_path);

}  // namespace wsa
