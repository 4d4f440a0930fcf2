#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "omega/report.hpp"

namespace omega {

// Runs fn(i) for i in [0, n). Under ExecPolicy::parallel iterations are
// spread over OpenMP threads; fn must only write to per-index state. The
// exception of the lowest failing index is rethrown after the loop, so both
// policies fail identically.
template <typename Fn>
void for_each_index(std::size_t n, ExecPolicy policy, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < count; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace omega
