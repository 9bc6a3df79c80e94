#pragma once

#include <cstddef>
#include <exception>
#include <string>

namespace pangular {

/// Serial is the reference path; parallel must produce identical results
/// because every per-index computation owns its inputs and writes only its
/// own output slot.
enum class Execution { serial, parallel };

std::string to_string(Execution e);
Execution execution_from_string(const std::string& s);

/// Number of worker threads a parallel loop may use (1 without OpenMP).
int max_threads() noexcept;

/// Calls f(i) for i in [0, n). Exceptions are captured and the one from the
/// lowest index is rethrown after the loop, so both policies fail the same way.
template <class F>
void for_each_index(Execution ex, std::size_t n, F&& f) {
  std::exception_ptr first;
  std::size_t first_index = n;
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
        first = std::current_exception();
        break;
      }
    }
  } else {
    const long long count = static_cast<long long>(n);
#if defined(PANGULAR_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < count; ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
#if defined(PANGULAR_HAVE_OPENMP)
#pragma omp critical(pangular_for_each_index)
#endif
        {
          if (static_cast<std::size_t>(i) < first_index) {
            first_index = static_cast<std::size_t>(i);
            first = std::current_exception();
          }
        }
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace pangular
