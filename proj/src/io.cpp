#include "wsa/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace wsa {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  if (v == std::rint(v) && std::abs(v) <= 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  // shortest representation that parses back to the same double
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_value(const std::string& s) {
  std::string t = trim(s);
  if (t == "inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  if (t == "nan" || t == "na") return std::numeric_limits<double>::quiet_NaN();
  std::size_t pos = 0;
  double v = std::stod(t, &pos);
  if (pos != t.size()) throw std::runtime_error("malformed number: " + s);
  return v;
}

}  // namespace

void write_signal_csv(const std::string& path, const Signal& x) {
  std::ofstream out = open_out(path);
  out << "value\n";
  for (double v : x) out << format_double(v) << "\n";
}

Signal read_signal_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  Signal x;
  bool first = true;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (first) {
      first = false;
      if (t == "value") continue;  // header optional on input
    }
    x.push_back(parse_value(t));
  }
  if (!all_finite(x)) throw std::runtime_error("signal file has non-finite entries: " + path);
  return x;
}

void write_matrix_csv(const std::string& path, const SensingMatrix& a) {
  std::ofstream out = open_out(path);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      if (j) out << ",";
      out << format_double(a(i, j));
    }
    out << "\n";
  }
}

SensingMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields = split(t, ',');
    std::vector<double> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) row.push_back(parse_value(f));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::runtime_error("ragged matrix rows in " + path);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty matrix file: " + path);
  SensingMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  if (!all_finite(a.entries)) {
    throw std::runtime_error("matrix file has non-finite entries: " + path);
  }
  return a;
}

void write_trace_csv(const std::string& path, const SolverTrace& trace,
                     const WeightVector& w) {
  std::ofstream out = open_out(path);
  const bool with_iterates = trace.iterates.size() == trace.length();
  out << "iter,objective,residual_norm,support_size,weighted_support";
  if (with_iterates && !trace.iterates.empty()) {
    for (std::size_t j = 0; j < trace.iterates.front().size(); ++j) {
      out << ",x_" << (j + 1);
    }
  }
  out << "\n";
  for (std::size_t n = 0; n < trace.length(); ++n) {
    out << n << "," << format_double(trace.objectives[n]) << ","
        << format_double(trace.residual_norms[n]) << "," << trace.supports[n].size() << ","
        << format_double(weighted_cardinality(trace.supports[n], w));
    if (with_iterates) {
      for (double v : trace.iterates[n]) out << "," << format_double(v);
    }
    out << "\n";
  }
}

std::string aggregate_csv_string(const AggregateResult& agg, const ExperimentConfig& cfg) {
  std::ostringstream out;
  std::istringstream cfg_lines(serialize_config(cfg));
  std::string line;
  while (std::getline(cfg_lines, line)) out << "# " << line << "\n";
  out << "solver,sweep_param,sweep_value,metric,value,trials,seed\n";
  auto row = [&](const AggregatePoint& p, const std::string& metric, const std::string& value) {
    out << p.solver << "," << p.sweep_param << "," << p.sweep_value << "," << metric << ","
        << value << "," << p.trials << "," << cfg.seed << "\n";
  };
  for (const AggregatePoint& p : agg.points) {
    if (agg.noisy) {
      row(p, "mean_log_error",
          p.mean_log_error ? format_double(*p.mean_log_error) : std::string("na"));
      row(p, "log_std_error",
          p.log_std_error ? format_double(*p.log_std_error) : std::string("na"));
    } else {
      row(p, "recovery_prob", format_double(p.recovery_probability));
    }
  }
  return out.str();
}

void write_aggregate_csv(const std::string& path, const AggregateResult& agg,
                         const ExperimentConfig& cfg) {
  std::ofstream out = open_out(path);
  out << aggregate_csv_string(agg, cfg);
}

AggregateResult read_aggregate_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  AggregateResult agg;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> f = split(t, ',');
    if (f.size() != 7) throw std::runtime_error("bad aggregate row: " + t);
    const std::string& metric = f[3];
    // rows for one (solver, point) arrive adjacent; merge them
    AggregatePoint* point = nullptr;
    int sweep_value = std::stoi(f[2]);
    for (AggregatePoint& p : agg.points) {
      if (p.solver == f[0] && p.sweep_param == f[1] && p.sweep_value == sweep_value) {
        point = &p;
        break;
      }
    }
    if (!point) {
      AggregatePoint p;
      p.solver = f[0];
      p.sweep_param = f[1];
      p.sweep_value = sweep_value;
      p.trials = std::stoi(f[5]);
      agg.points.push_back(std::move(p));
      point = &agg.points.back();
    }
    if (f[4] == "na") continue;
    double value = parse_value(f[4]);
    if (metric == "recovery_prob") {
      point->recovery_probability = value;
    } else if (metric == "mean_log_error") {
      point->mean_log_error = value;
      agg.noisy = true;
    } else if (metric == "log_std_error") {
      point->log_std_error = value;
      agg.noisy = true;
    } else {
      throw std::runtime_error("unknown metric '" + metric + "' in " + path);
    }
  }
  if (agg.points.empty()) throw std::runtime_error("no aggregate rows in " + path);
  return agg;
}

}  // namespace wsa
