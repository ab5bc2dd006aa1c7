#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace cforge {

/// Evaluation policy for data-parallel kernels. Results are identical under
/// both; `serial` is the reference path.
enum class Exec { serial, parallel };

/// Runs body(i) for i in [0, n). Under Exec::parallel the iterations are
/// spread over OpenMP threads; the first exception thrown is rethrown.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cforge
