#pragma once

#include <cstddef>
#include <exception>

namespace hcyl {

/// Execution policy for the data-parallel kernels. `Serial` is the
/// reference path the tests compare against.
enum class Exec { Serial, Parallel };

/// Runs fn(i) for i in [0, n). Under `Parallel` the loop is an OpenMP
/// worksharing loop; the first exception thrown by any iteration is
/// rethrown on the calling thread after the loop joins.
template <class Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hcyl_parallel_for_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace hcyl
