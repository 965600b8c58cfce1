#pragma once

#include <cstddef>
#include <exception>

namespace loclab {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical output; the serial path is kept for testing and benchmarks.
enum class Execution { serial, parallel };

/// Worker cap: LOCLAB_THREADS when set to a positive integer, otherwise the
/// OpenMP default.
int workerCount();

/// Runs fn(i) for i in [0, n). The parallel form hands indices out
/// dynamically to OpenMP workers; the first exception thrown by any worker is
/// rethrown on the calling thread after the loop.
template <class Fn>
void forEachIndex(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(workerCount())
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(loclab_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace loclab
