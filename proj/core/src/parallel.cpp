#include "kcl/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace kcl {

std::size_t dispatch_chunk(std::size_t vertex_count, std::size_t threads) noexcept {
  return std::max<std::size_t>(1, vertex_count / (64 * std::max<std::size_t>(1, threads)));
}

EngineStats node_parallel_list(const UndirectedGraph& g, const EngineConfig& config, CliqueSink& sink) {
  config.validate();
  return node_parallel_list(PreparedGraph::build(g), config, sink);
}

EngineStats node_parallel_list(const PreparedGraph& prepared, const EngineConfig& config, CliqueSink& sink) {
  config.validate();
  if (config.threads == 1) {
    Engine engine(prepared.root, config, sink);
    engine.run();
    return engine.stats();
  }

  const std::size_t n = prepared.root.size();
  const std::size_t chunk = dispatch_chunk(n, config.threads);
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  std::vector<std::unique_ptr<CliqueSink>> worker_sinks;
  std::vector<EngineStats> worker_stats(config.threads);
  for (std::uint32_t w = 0; w < config.threads; ++w) worker_sinks.push_back(sink.make_worker());

  {
    std::vector<std::jthread> workers;
    for (std::uint32_t w = 0; w < config.threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          Engine engine(prepared.root, config, *worker_sinks[w], nullptr, &stop);
          while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t begin = cursor.fetch_add(chunk);
            if (begin >= n) break;
            const std::size_t end = std::min(n, begin + chunk);
            // Rank r lives at root-local index n - 1 - r.
            for (std::size_t r = begin; r < end; ++r) {
              engine.run_subtask(static_cast<std::uint32_t>(n - 1 - r));
            }
          }
          worker_stats[w] = engine.stats();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          stop = true;
        }
      });
    }
  }

  for (auto& ws : worker_sinks) sink.join(*ws);
  if (failure) std::rethrow_exception(failure);

  EngineStats merged;
  merged.listing_calls = 1;  // the top-level call the subtasks were split from
  for (const auto& s : worker_stats) merged += s;
  return merged;
}

}  // namespace kcl
