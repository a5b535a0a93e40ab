#include "schur/parallel.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schur {

void parallel_for(const Exec& exec, std::size_t n, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  if (exec.parallel()) {
    // exceptions may not cross the parallel region; keep the first one
    std::exception_ptr first;
    std::mutex guard;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard lock(guard);
        if (!first) first = std::current_exception();
      }
    }
    if (first) std::rethrow_exception(first);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace schur
