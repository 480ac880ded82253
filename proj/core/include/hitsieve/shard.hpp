#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hitsieve {

struct Parallelism {
  unsigned threads = 1;
  unsigned shards = 0;  // 0: four per thread
};

// Splits [0, total) into contiguous shards, runs work(lo, hi) -> R on a thread
// pool, and folds the results with merge in shard order. Output depends only on
// the shard boundaries when merge is associative, and not at all on them when
// merge is also commutative.
template <class R, class Work, class Merge>
R shard_and_merge(std::uint64_t total, const Parallelism& par, R init, Work work, Merge merge) {
  const unsigned threads = std::max(1u, par.threads);
  const std::uint64_t shards =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, par.shards ? par.shards : 4ull * threads));
  std::vector<R> results(shards, init);
  std::vector<std::exception_ptr> errors(shards);
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t s; (s = next.fetch_add(1)) < shards;) {
      const std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
      try {
        results[s] = work(lo, hi);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  if (threads == 1 || shards == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, shards); ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  R acc = init;
  for (auto& r : results) acc = merge(std::move(acc), std::move(r));
  return acc;
}

}  // namespace hitsieve
