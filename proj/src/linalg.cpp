#include "wsa/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "wsa/errors.hpp"

namespace wsa {

std::vector<double> symmetric_eigenvalues(std::vector<double> g, int k) {
  if (k < 0 || g.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw dimension_error("symmetric_eigenvalues: matrix size mismatch");
  }
  auto at = [&](int i, int j) -> double& {
    return g[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
             static_cast<std::size_t>(j)];
  };

  double scale = 0.0;
  for (double v : g) scale = std::max(scale, std::abs(v));
  const double tol = 1e-14 * std::max(scale, 1.0);

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < k; ++p) {
      for (int q = p + 1; q < k; ++q) off = std::max(off, std::abs(at(p, q)));
    }
    if (off <= tol) break;
    for (int p = 0; p < k; ++p) {
      for (int q = p + 1; q < k; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) <= tol * 1e-2) continue;
        double app = at(p, p);
        double aqq = at(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < k; ++i) {
          double gip = at(i, p);
          double giq = at(i, q);
          at(i, p) = c * gip - s * giq;
          at(i, q) = s * gip + c * giq;
        }
        for (int i = 0; i < k; ++i) {
          double gpi = at(p, i);
          double gqi = at(q, i);
          at(p, i) = c * gpi - s * gqi;
          at(q, i) = s * gpi + c * gqi;
        }
      }
    }
  }

  std::vector<double> eigs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) eigs[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

std::vector<double> cholesky_solve(std::vector<double> g, std::vector<double> rhs,
                                   bool& ridge_used) {
  const int k = static_cast<int>(rhs.size());
  if (g.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw dimension_error("cholesky_solve: matrix size mismatch");
  }
  ridge_used = false;
  auto at = [&](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
             static_cast<std::size_t>(j)];
  };

  double diag_scale = 0.0;
  for (int i = 0; i < k; ++i) diag_scale = std::max(diag_scale, std::abs(at(g, i, i)));
  const double pivot_floor = 1e-14 * std::max(diag_scale, 1.0);

  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<double> l = g;
    if (attempt == 1) {
      for (int i = 0; i < k; ++i) at(l, i, i) += 1e-12;
      ridge_used = true;
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        double sum = at(l, i, j);
        for (int p = 0; p < j; ++p) sum -= at(l, i, p) * at(l, j, p);
        if (i == j) {
          if (sum <= pivot_floor) {
            ok = false;
            break;
          }
          at(l, i, i) = std::sqrt(sum);
        } else {
          at(l, i, j) = sum / at(l, j, j);
        }
      }
    }
    if (!ok) continue;

    // forward then backward substitution
    std::vector<double> y(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      double sum = rhs[static_cast<std::size_t>(i)];
      for (int p = 0; p < i; ++p) sum -= at(l, i, p) * y[static_cast<std::size_t>(p)];
      y[static_cast<std::size_t>(i)] = sum / at(l, i, i);
    }
    std::vector<double> b(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      double sum = y[static_cast<std::size_t>(i)];
      for (int p = i + 1; p < k; ++p) sum -= at(l, p, i) * b[static_cast<std::size_t>(p)];
      b[static_cast<std::size_t>(i)] = sum / at(l, i, i);
    }
    return b;
  }
  throw numerical_error("cholesky_solve: matrix not positive definite even with ridge");
}

}  // namespace wsa
