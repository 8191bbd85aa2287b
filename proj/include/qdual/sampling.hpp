#pragma once

// Seeded sampling of modules and short exact sequences for the property
// suites, plus an order-preserving parallel map.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "qdual/module.hpp"

namespace qdual {

struct SampleConfig {
  Index count = 30;
  Index max_free_rank = 2;
  std::uint64_t seed = 7;
  /// Samples larger than this are redrawn.
  Index max_dim = 6;
};

/// `count` random modules with 0 < dim <= max_dim; deterministic in the config.
std::vector<Module> sample_modules(const RingPtr& ring, const SampleConfig& config);

/// 0 -> S -> L -> L/S -> 0 for random L and a random submodule S.
std::vector<ShortExactSequence> sample_sequences(const RingPtr& ring, const SampleConfig& config);

/// 0 -> R^a -> R^a + R^b -> R^b -> 0.
ShortExactSequence split_free_sequence(const RingPtr& ring, Index a, Index b);

/// 0 -> soc M -> M -> M / soc M -> 0.
ShortExactSequence socle_sequence(const Module& m);

/// Applies fn to 0..n-1 on a small worker pool; results keep index order.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(n);
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qdual
