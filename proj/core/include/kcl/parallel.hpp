#ifndef KCL_PARALLEL_HPP
#define KCL_PARALLEL_HPP

#include <cstddef>

#include "kcl/engine.hpp"
#include "kcl/graph.hpp"
#include "kcl/sink.hpp"

namespace kcl {

/// Chunk of consecutive depth-1 subtasks handed out per dispatch.
std::size_t dispatch_chunk(std::size_t vertex_count, std::size_t threads) noexcept;

/// NodeParallel listing: one subtask per vertex, dispatched in ascending rank
/// order in contiguous chunks to `config.threads` workers, each running its
/// own Engine with a private trie (tau applies per worker). With one thread
/// this is exactly list_k_cliques.
///
/// Rethrows TimeLimitExceeded (or any worker failure) after all workers stop.
EngineStats node_parallel_list(const UndirectedGraph& g, const EngineConfig& config, CliqueSink& sink);
EngineStats node_parallel_list(const PreparedGraph& prepared, const EngineConfig& config, CliqueSink& sink);

}  // namespace kcl

#endif  // KCL_PARALLEL_HPP
