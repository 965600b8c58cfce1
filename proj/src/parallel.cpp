#include "loclab/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace loclab {

int workerCount() {
  if (const char* env = std::getenv("LOCLAB_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace loclab
