#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace spherecross::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(worker, workers) on `workers` workers (the calling thread is
/// worker 0).  The first exception thrown by any worker is rethrown.
/// Workers must partition their input deterministically from (worker,
/// workers) and write only worker-local state, so results do not depend on
/// scheduling.
inline void parallel_run(unsigned workers, const std::function<void(unsigned, unsigned)>& fn) {
  if (workers <= 1) {
    fn(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    fn(0, workers);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace spherecross::detail
