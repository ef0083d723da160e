#include "gridsign/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gridsign/errors.hpp"

namespace gridsign {

int configured_threads() {
  const char* env = std::getenv("GRIDSIGN_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1 || v > 1024)
    fail(Errc::MalformedInput, std::string("GRIDSIGN_THREADS must be a positive integer, got '") + env + "'");
  return static_cast<int>(v);
}

void parallel_for(long long count, const std::function<void(long long)>& fn) {
  if (count <= 0) return;
  const int threads = static_cast<int>(std::min<long long>(configured_threads(), count));
  if (threads <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }

  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&](long long lo, long long hi) {
    try {
      for (long long i = lo; i < hi; ++i) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  const long long chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long long lo = t * chunk;
    const long long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gridsign
