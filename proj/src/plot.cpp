#include "wsa/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "wsa/io.hpp"

namespace wsa {
namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 20;
constexpr int kMarginBottom = 55;

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                          "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double metric_value(const AggregatePoint& p, const std::string& metric, bool& present) {
  present = true;
  if (metric == "recovery_prob") return p.recovery_probability;
  if (metric == "mean_log_error") {
    if (p.mean_log_error) return *p.mean_log_error;
  } else if (metric == "log_std_error") {
    if (p.log_std_error) return *p.log_std_error;
  } else {
    throw std::invalid_argument("render_plot_svg: unknown metric '" + metric + "'");
  }
  present = false;
  return 0.0;
}

}  // namespace

std::string render_plot_svg(const AggregateResult& agg, const std::string& metric) {
  if (agg.points.empty()) {
    throw std::invalid_argument("render_plot_svg: empty aggregate");
  }

  struct Series {
    std::vector<std::pair<double, double>> pts;  // sweep value, metric value (finite)
    std::vector<double> sentinel_xs;             // sweep values with non-finite metric
  };
  std::map<std::string, Series> series;  // keyed by solver name: stable color order
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool any = false;
  std::string sweep_param = agg.points.front().sweep_param;

  for (const AggregatePoint& p : agg.points) {
    bool present = false;
    double v = metric_value(p, metric, present);
    if (!present) continue;
    double x = static_cast<double>(p.sweep_value);
    if (!std::isfinite(v)) {
      series[p.solver].sentinel_xs.push_back(x);
      continue;
    }
    series[p.solver].pts.emplace_back(x, v);
    if (!any) {
      x_min = x_max = x;
      y_min = y_max = v;
      any = true;
    } else {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (!any && series.empty()) {
    throw std::invalid_argument("render_plot_svg: metric '" + metric + "' absent");
  }
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) {
    y_max = y_min + 0.5;
    y_min = y_min - 0.5;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) {
    return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
      << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << coord(plot_w) << "\" height=\"" << coord(plot_h)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  // axis ticks: 5 per axis
  for (int t = 0; t <= 4; ++t) {
    double fx = x_min + (x_max - x_min) * t / 4.0;
    double fy = y_min + (y_max - y_min) * t / 4.0;
    svg << "<line x1=\"" << coord(sx(fx)) << "\" y1=\"" << coord(kMarginTop + plot_h)
        << "\" x2=\"" << coord(sx(fx)) << "\" y2=\"" << coord(kMarginTop + plot_h + 5)
        << "\" stroke=\"#333333\"/>\n";
    svg << "<text x=\"" << coord(sx(fx)) << "\" y=\"" << coord(kMarginTop + plot_h + 20)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_double(fx) << "</text>\n";
    svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << coord(sy(fy)) << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << coord(sy(fy)) << "\" stroke=\"#333333\"/>\n";
    svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << coord(sy(fy) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(fy) << "</text>\n";
  }
  svg << "<text x=\"" << coord(kMarginLeft + plot_w / 2) << "\" y=\"" << kHeight - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">" << sweep_param << "</text>\n";
  svg << "<text x=\"16\" y=\"" << coord(kMarginTop + plot_h / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << coord(kMarginTop + plot_h / 2) << ")\">" << metric << "</text>\n";

  int color_idx = 0;
  int legend_y = kMarginTop + 14;
  for (const auto& [solver, data] : series) {
    const char* color = kPalette[color_idx % 8];
    ++color_idx;
    if (data.pts.size() >= 2) {
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < data.pts.size(); ++i) {
        if (i) svg << " ";
        svg << coord(sx(data.pts[i].first)) << "," << coord(sy(data.pts[i].second));
      }
      svg << "\"/>\n";
    }
    for (const auto& [x, y] : data.pts) {
      svg << "<circle cx=\"" << coord(sx(x)) << "\" cy=\"" << coord(sy(y))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    // non-finite values (the -inf std sentinel) marked at the bottom edge
    for (double x : data.sentinel_xs) {
      svg << "<rect x=\"" << coord(sx(x) - 3) << "\" y=\"" << coord(kMarginTop + plot_h - 3)
          << "\" width=\"6\" height=\"6\" fill=\"" << color << "\"/>\n";
    }
    svg << "<text x=\"" << kWidth - kMarginRight - 6 << "\" y=\"" << legend_y
        << "\" font-size=\"12\" text-anchor=\"end\" fill=\"" << color << "\">" << solver
        << "</text>\n";
    legend_y += 16;
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const AggregateResult& agg, const std::string& metric,
               const std::string& out_path) {
  std::string svg = render_plot_svg(agg, metric);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << svg;
}

}  // namespace wsa
