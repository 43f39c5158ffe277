#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace frey13 {

// Static block partition of [0, n) over `workers` threads. body(begin, end)
// runs once per block; callers must make per-block state independent and
// merge deterministically (results here are sets, so merge order never
// shows in output).
inline void parallel_blocks(long long n, int workers,
                            const std::function<void(long long, long long, int)>& body) {
  if (workers < 1) workers = 1;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw > 0) workers = std::min(workers, hw * 4);
  workers = static_cast<int>(std::min<long long>(workers, std::max<long long>(n, 1)));
  if (workers == 1 || n < 2) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  long long chunk = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    long long lo = t * chunk;
    long long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi, t] { body(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace frey13
