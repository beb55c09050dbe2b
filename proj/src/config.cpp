#include <fstream>
#include <sstream>

#include "wsa/io.hpp"

namespace wsa {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("malformed integer: " + s);
  return v;
}

// "1..100" or "40,60,80,100" or "25"
std::vector<int> parse_int_list(const std::string& s) {
  std::string t = trim(s);
  std::size_t dots = t.find("..");
  if (dots != std::string::npos) {
    int lo = parse_int(trim(t.substr(0, dots)));
    int hi = parse_int(trim(t.substr(dots + 2)));
    if (hi < lo) throw std::invalid_argument("empty range: " + s);
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
  }
  std::vector<int> v;
  std::istringstream in(t);
  std::string field;
  while (std::getline(in, field, ',')) v.push_back(parse_int(trim(field)));
  if (v.empty()) throw std::invalid_argument("empty list: " + s);
  return v;
}

std::vector<std::string> parse_name_list(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::string t = trim(field);
    if (!t.empty()) v.push_back(t);
  }
  return v;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

std::string join_names(const std::vector<std::string>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

std::string projection_name(ProjectionMode mode) {
  switch (mode) {
    case ProjectionMode::exact_dp: return "exact_dp";
    case ProjectionMode::exact_enum: return "exact_enum";
    case ProjectionMode::surrogate: return "surrogate";
  }
  return "surrogate";
}

ProjectionMode projection_from_name(const std::string& name) {
  if (name == "exact_dp" || name == "exact") return ProjectionMode::exact_dp;
  if (name == "exact_enum" || name == "enum") return ProjectionMode::exact_enum;
  if (name == "surrogate") return ProjectionMode::surrogate;
  throw std::invalid_argument("unknown projection mode: " + name);
}

}  // namespace

void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value) {
  if (key == "N") {
    cfg.n = parse_int(value);
  } else if (key == "m") {
    cfg.m_values = parse_int_list(value);
  } else if (key == "s") {
    cfg.s_values = parse_int_list(value);
  } else if (key == "trials") {
    cfg.trials = parse_int(value);
  } else if (key == "seed") {
    cfg.seed = std::stoull(value);
  } else if (key == "solvers") {
    cfg.solvers = parse_name_list(value);
  } else if (key == "sigma") {
    cfg.sigma = std::stod(value);
  } else if (key == "projection") {
    cfg.projection = projection_from_name(trim(value));
  } else if (key == "recovery_tol") {
    cfg.recovery_tol = std::stod(value);
  } else if (key == "max_iters") {
    cfg.max_iters = parse_int(value);
  } else if (key == "halt_tol") {
    cfg.halt_tol = std::stod(value);
  } else if (key == "scaling") {
    std::string t = trim(value);
    if (t == "rip") {
      cfg.scaling = MatrixScaling::rip;
    } else if (t.rfind("spectral:", 0) == 0) {
      cfg.scaling = MatrixScaling::spectral;
      cfg.spectral_target = std::stod(t.substr(9));
    } else if (t == "spectral") {
      cfg.scaling = MatrixScaling::spectral;
    } else {
      throw std::invalid_argument("unknown scaling: " + value);
    }
  } else if (key == "a_range") {
    std::vector<int> r = parse_int_list(value);
    cfg.a_min = r.front();
    cfg.a_max = r.back();
  } else if (key == "b_range") {
    std::vector<int> r = parse_int_list(value);
    cfg.b_min = r.front();
    cfg.b_max = r.back();
  } else if (key == "threads") {
    cfg.threads = parse_int(value);
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

void apply_config_text(ExperimentConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw parse_error("config line is not 'key = value'", line_number);
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    try {
      apply_config_override(cfg, key, value);
    } catch (const std::exception& e) {
      throw parse_error(std::string(e.what()), line_number);
    }
  }
}

ExperimentConfig parse_config_string(const std::string& text) {
  ExperimentConfig cfg;
  apply_config_text(cfg, text);
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_string(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "N = " << cfg.n << "\n";
  out << "m = " << join_ints(cfg.m_values) << "\n";
  out << "s = " << join_ints(cfg.s_values) << "\n";
  out << "trials = " << cfg.trials << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "solvers = " << join_names(cfg.solvers) << "\n";
  out << "sigma = " << format_double(cfg.sigma) << "\n";
  out << "projection = " << projection_name(cfg.projection) << "\n";
  out << "recovery_tol = " << format_double(cfg.recovery_tol) << "\n";
  out << "max_iters = " << cfg.max_iters << "\n";
  out << "halt_tol = " << format_double(cfg.halt_tol) << "\n";
  if (cfg.scaling == MatrixScaling::rip) {
    out << "scaling = rip\n";
  } else {
    out << "scaling = spectral:" << format_double(cfg.spectral_target) << "\n";
  }
  out << "a_range = " << cfg.a_min << ".." << cfg.a_max << "\n";
  out << "b_range = " << cfg.b_min << ".." << cfg.b_max << "\n";
  out << "threads = " << cfg.threads << "\n";
  return out.str();
}

}  // namespace wsa
