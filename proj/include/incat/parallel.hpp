#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace incat {

/// Serial is the reference path; Parallel must produce identical results.
enum class Exec { Serial, Parallel };

/// Evaluates fn(0..n-1) and returns the results in index order.
template <class F>
auto index_map(std::size_t n, F&& fn, Exec exec) {
  using R = std::remove_cvref_t<std::invoke_result_t<F&, std::size_t>>;
  std::vector<R> out(n);
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(incat_index_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace incat
