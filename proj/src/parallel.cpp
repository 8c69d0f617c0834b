#include "workbench/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace workbench {

int worker_threads() {
  static const int threads = [] {
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
      try {
        const int t = std::stoi(env);
        if (t > 0) return t;
      } catch (...) {
      }
    }
    return omp_get_max_threads();
  }();
  return threads;
}

}  // namespace workbench
