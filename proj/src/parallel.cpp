#include "skeinlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace skeinlab {

int thread_budget() {
  if (const char* env = std::getenv("SKEINLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::int64_t n, int max_chunks,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  if (n <= 0) return;
  const int want = std::min<std::int64_t>({n, max_chunks, thread_budget()});
  const int chunks = std::max(want, 1);
  if (chunks == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(chunks));
  const std::int64_t step = (n + chunks - 1) / chunks;
  for (int k = 0; k < chunks; ++k) {
    const std::int64_t b = k * step;
    const std::int64_t e = std::min(n, b + step);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e, k] { fn(b, e, k); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace skeinlab
