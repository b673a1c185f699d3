// Compares the serial reference path with the OpenMP lanes on the heavier
// experiment grids.
#include <chrono>
#include <cstdio>

#include "polykron/experiments.hpp"
#include "polykron/parallel.hpp"

using namespace polykron;

namespace {

double time_run(const char* name, const ExperimentBounds& b) {
  auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep = run_experiment(name, b);
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!rep.pass) std::printf("  warning: %s did not pass\n", name);
  return dt;
}

}  // namespace

int main() {
  ExperimentBounds b;
  const char* names[] = {"cancellation", "stacked_rule", "quad_census", "bounds_check"};
  std::printf("%-24s %10s %10s %8s\n", "experiment", "serial[s]", "openmp[s]", "speedup");
  for (const char* name : names) {
    parallel_enabled() = false;
    double ts = time_run(name, b);
    parallel_enabled() = true;
    double tp = time_run(name, b);
    std::printf("%-24s %10.3f %10.3f %7.2fx\n", name, ts, tp, ts / tp);
  }
  return 0;
}
