#ifndef POLYKRON_PARALLEL_HPP
#define POLYKRON_PARALLEL_HPP

#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polykron {

// Process-wide switch for the OpenMP lanes (experiment grids and the
// per-candidate fan-outs). Serial execution is the reference path; results
// are merged by index so both modes produce identical output.
inline bool& parallel_enabled() {
  static bool enabled = [] {
    if (const char* env = std::getenv("POLYKRON_SERIAL")) return env[0] == '0';
    return true;
  }();
  return enabled;
}

template <typename F>
void parallel_for(int count, F&& body) {
#ifdef _OPENMP
  if (parallel_enabled() && count > 1) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
#endif
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace polykron

#endif
