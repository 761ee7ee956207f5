#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ptb {

// Runs fn(shard) for every shard index. Shards are independent; with jobs > 1
// they are pulled from a shared counter by worker threads. Callers merge
// per-shard results in shard order, so the outcome never depends on the job
// count.
inline void run_sharded(int shard_count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || shard_count <= 1) {
    for (int s = 0; s < shard_count; ++s) fn(s);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int s = next.fetch_add(1); s < shard_count; s = next.fetch_add(1)) fn(s);
  };
  std::vector<std::thread> pool;
  int threads = std::min(jobs, shard_count);
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace ptb
