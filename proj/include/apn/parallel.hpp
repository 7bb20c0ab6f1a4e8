#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace apn {

/// Worker count from APNKIT_JOBS, else 1.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("APNKIT_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Runs fn(begin, end, worker) over `jobs` contiguous slices of [0, n) and
/// rethrows the first worker exception. Slices are fixed by (n, jobs) so
/// per-worker partial results can be merged in worker order.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1)));
  if (jobs == 1) {
    fn(std::size_t{0}, n, 0U);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      const std::size_t begin = n * w / jobs;
      const std::size_t end = n * (w + 1) / jobs;
      pool.emplace_back([&, begin, end, w] {
        try {
          fn(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace apn
