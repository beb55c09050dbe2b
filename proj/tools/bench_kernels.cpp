// Benchmark comparing the OpenMP kernels against their serial references:
// forward/adjoint matrix application, enumeration-backed isometry constants,
// and the experiment trial loop. --quick shrinks everything for smoke runs.

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "wsa/experiments.hpp"
#include "wsa/sensing.hpp"

namespace {

double time_repeated(int reps, const std::function<void()>& body) {
  double t0 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) body();
  return (omp_get_wtime() - t0) / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.4f ms   parallel %10.4f ms   speedup %.2fx\n", name,
              serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const int m = quick ? 256 : 2048;
    const int n = quick ? 512 : 4096;
    const int reps = quick ? 5 : 20;
    wsa::SensingMatrix a = wsa::gaussian_matrix(m, n, 42, wsa::GaussianScaling::rip);
    wsa::Signal x(static_cast<std::size_t>(n), 1.0);
    wsa::MeasurementVector y(static_cast<std::size_t>(m), 1.0);

    double checksum = 0.0;
    double ts = time_repeated(reps, [&] { checksum += a.forward_serial(x)[0]; });
    double tp = time_repeated(reps, [&] { checksum += a.forward(x)[0]; });
    report("forward apply", ts, tp);

    ts = time_repeated(reps, [&] { checksum += a.adjoint_serial(y)[0]; });
    tp = time_repeated(reps, [&] { checksum += a.adjoint(y)[0]; });
    report("adjoint apply", ts, tp);
    std::printf("  (checksum %g)\n", checksum);
  }

  {
    const int m = quick ? 10 : 14;
    const int n = quick ? 14 : 20;
    const int order = quick ? 4 : 6;
    wsa::SensingMatrix a = wsa::gaussian_matrix(m, n, 7, wsa::GaussianScaling::rip);
    wsa::WeightVector w = wsa::WeightVector::uniform(static_cast<std::size_t>(n));

    double ts = time_repeated(1, [&] { wsa::rip_constant_serial(a, w, order); });
    double tp = time_repeated(1, [&] { wsa::rip_constant(a, w, order); });
    report("rip constant", ts, tp);
  }

  {
    wsa::ExperimentConfig cfg;
    cfg.n = 128;
    cfg.m_values = {48};
    cfg.s_values = {12};
    cfg.trials = quick ? 8 : 40;
    cfg.solvers = {"ihwt", "iht"};
    cfg.max_iters = 200;
    cfg.seed = 3;

    const int hw_threads = omp_get_max_threads();
    cfg.threads = 1;
    double ts = time_repeated(1, [&] { wsa::run_measurement_sweep(cfg); });
    cfg.threads = hw_threads;
    double tp = time_repeated(1, [&] { wsa::run_measurement_sweep(cfg); });
    report("experiment trials", ts, tp);
  }
  return 0;
}
