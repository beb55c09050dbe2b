#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wsa/rng.hpp"
#include "wsa/sensing.hpp"

using namespace wsa;

TEST_CASE("gaussian rip scaling concentrates column norms") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SensingMatrix a = gaussian_matrix(128, 256, seed, GaussianScaling::rip);
    for (int j = 0; j < a.cols; ++j) {
      double norm_sq = 0.0;
      for (int i = 0; i < a.rows; ++i) norm_sq += a(i, j) * a(i, j);
      double norm = std::sqrt(norm_sq);
      CHECK(norm > 0.7);
      CHECK(norm < 1.3);
    }
  }
}

TEST_CASE("gaussian spectral scaling hits the target") {
  SensingMatrix a = gaussian_matrix(4, 4, 11, GaussianScaling::spectral, 0.9);
  CHECK(spectral_norm(a, 1e-13) == doctest::Approx(0.9).epsilon(1e-10));
  CHECK_THROWS(gaussian_matrix(4, 4, 11, GaussianScaling::spectral, 1.0));
  CHECK_THROWS(gaussian_matrix(4, 4, 11, GaussianScaling::spectral, 0.0));
}

TEST_CASE("gaussian matrices are seed-deterministic") {
  SensingMatrix a = gaussian_matrix(16, 32, 5, GaussianScaling::rip);
  SensingMatrix b = gaussian_matrix(16, 32, 5, GaussianScaling::rip);
  CHECK(a.entries == b.entries);
  SensingMatrix c = gaussian_matrix(16, 32, 6, GaussianScaling::rip);
  CHECK(a.entries != c.entries);
}

TEST_CASE("apply and adjoint") {
  SensingMatrix eye = SensingMatrix::identity(3);
  Signal x{1, -2, 3};
  CHECK(eye.forward(x) == x);
  CHECK(SensingMatrix::scaled_identity(3, 2.0).forward(x) == MeasurementVector{2, -4, 6});
  CHECK_THROWS_AS(eye.forward({1.0}), dimension_error);
  CHECK_THROWS_AS(eye.adjoint({1.0}), dimension_error);

  std::mt19937_64 rng = seeded_engine(31);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    SensingMatrix a = gaussian_matrix(9, 14, rng(), GaussianScaling::rip);
    Signal v(14);
    MeasurementVector u(9);
    for (double& t : v) t = normal(rng);
    for (double& t : u) t = normal(rng);
    double lhs = dot(a.forward(v), u);
    double rhs = dot(v, a.adjoint(u));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("parallel kernels match the serial reference bitwise") {
  SensingMatrix a = gaussian_matrix(37, 61, 13, GaussianScaling::rip);
  std::mt19937_64 rng = seeded_engine(13);
  std::normal_distribution<double> normal(0.0, 1.0);
  Signal x(61);
  MeasurementVector y(37);
  for (double& v : x) v = normal(rng);
  for (double& v : y) v = normal(rng);
  CHECK(a.forward(x) == a.forward_serial(x));
  CHECK(a.adjoint(y) == a.adjoint_serial(y));
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(SensingMatrix::identity(5)) == doctest::Approx(1.0));
  SensingMatrix diag(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = 0.5;
  CHECK(spectral_norm(diag) == doctest::Approx(3.0));
  CHECK_THROWS(spectral_norm(diag, 0.0));

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SensingMatrix a = gaussian_matrix(10, 10, seed, GaussianScaling::rip);
    CHECK(spectral_norm(a, 1e-12) ==
          doctest::Approx(oracle::eigen_spectral_norm(a)).epsilon(1e-8));
  }
}

TEST_CASE("rip constant on exact isometries") {
  WeightVector w({1.0, std::sqrt(2.0), std::sqrt(3.0)});
  RipEstimate zero = rip_constant(SensingMatrix::identity(3), w, 3.0);
  CHECK(zero.delta == 0.0);
  CHECK(zero.supports_checked >= 1);
  CHECK(zero.weighted);

  RipEstimate stretched = rip_constant(SensingMatrix::scaled_identity(3, 2.0), w, 3.0);
  CHECK(stretched.delta == doctest::Approx(3.0));

  CHECK_THROWS_AS(rip_constant(gaussian_matrix(10, 26, 1, GaussianScaling::rip),
                               WeightVector::uniform(26), 2.0),
                  unsupported_error);
}

TEST_CASE("rip constant matches the Eigen oracle and is monotone") {
  std::mt19937_64 rng = seeded_engine(41);
  for (int trial = 0; trial < 8; ++trial) {
    SensingMatrix a = gaussian_matrix(10, 12, rng(), GaussianScaling::rip);
    std::vector<double> wv(12);
    for (double& v : wv) v = std::sqrt(static_cast<double>(1 + rng() % 3));
    WeightVector w(wv);
    double budget = 2.0 + static_cast<double>(rng() % 5);

    RipEstimate est = rip_constant(a, w, budget);
    CHECK(est.delta == doctest::Approx(oracle::eigen_rip_delta(a, w, budget)).epsilon(1e-9));
    CHECK(est.delta <= rip_constant(a, w, budget + 2.0).delta + 1e-15);

    RipEstimate serial = rip_constant_serial(a, w, budget);
    CHECK(est.delta == serial.delta);
    CHECK(est.supports_checked == serial.supports_checked);
  }
}

TEST_CASE("uniform weights reduce to the unweighted constant") {
  SensingMatrix a = gaussian_matrix(8, 12, 3, GaussianScaling::rip);
  WeightVector ones = WeightVector::uniform(12);
  CHECK(rip_constant(a, ones, 3.0).delta == rip_constant_unweighted(a, 3).delta);
  CHECK_FALSE(rip_constant_unweighted(a, 3).weighted);
}

TEST_CASE("weighted budgets ignore heavy-tail atoms; unweighted ones do not") {
  // sqrt weights, budget 6: only atoms with squared weight <= 6 can appear,
  // so perturbing a high-index column leaves the weighted constant unchanged
  // while the unweighted constant of order P_w(6) = 3 moves.
  const int n = 12;
  SensingMatrix a = gaussian_matrix(9, n, 8, GaussianScaling::rip);
  WeightVector w = WeightVector::sqrt_index(n);
  REQUIRE(max_support_size(w, 6.0) == 3);

  double before_w = rip_constant(a, w, 6.0).delta;
  double before_u = rip_constant_unweighted(a, 3).delta;

  SensingMatrix b = a;
  for (int i = 0; i < b.rows; ++i) b(i, 10) *= 2.5;
  CHECK(rip_constant(b, w, 6.0).delta == before_w);
  CHECK(rip_constant_unweighted(b, 3).delta != before_u);
}

TEST_CASE("isometry inequality suite stays clean") {
  SensingMatrix eye = SensingMatrix::identity(8);
  WeightVector w = WeightVector::uniform(8);
  RipBoundsReport id_report = check_rip_bounds(eye, w, 50, 1);
  CHECK(id_report.clean());
  CHECK(id_report.min_slack[0] >= 0.0);
  CHECK(id_report.min_slack[1] >= 0.0);
  CHECK(id_report.min_slack[2] >= 0.0);

  std::vector<double> wv(16);
  std::mt19937_64 rng = seeded_engine(2);
  for (double& v : wv) v = (rng() % 2) ? 2.0 : 1.0;
  SensingMatrix a = gaussian_matrix(10, 16, 77, GaussianScaling::rip);
  RipBoundsReport report = check_rip_bounds(a, WeightVector(wv), 500, 3);
  CHECK(report.trials == 500);
  CHECK(report.clean());

  CHECK_THROWS_AS(check_rip_bounds(gaussian_matrix(10, 22, 1, GaussianScaling::rip),
                                   WeightVector::uniform(22), 10, 1),
                  unsupported_error);
}
