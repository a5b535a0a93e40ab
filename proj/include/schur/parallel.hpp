#pragma once

#include <cstddef>
#include <functional>

namespace schur {

/// Worker count for the data-parallel kernels. threads <= 1 selects the
/// serial reference path, which never touches OpenMP. Results never depend on
/// the worker count.
struct Exec {
  int threads = 1;

  static Exec serial() { return {1}; }
  bool parallel() const { return threads > 1; }
};

/// body(i) for i in [0, n). Iterations must be independent; each writes only
/// its own output slot.
void parallel_for(const Exec& exec, std::size_t n, const std::function<void(std::size_t)>& body);

/// Whether the library was built with OpenMP.
bool openmp_available();

}  // namespace schur
