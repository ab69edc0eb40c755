#ifndef KCL_ENGINE_HPP
#define KCL_ENGINE_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kcl/graph.hpp"
#include "kcl/prune.hpp"
#include "kcl/sink.hpp"
#include "kcl/trie.hpp"

namespace kcl {

inline constexpr std::uint64_t kDefaultTau = 16'000'000;
inline constexpr std::uint64_t kUnboundedTau = std::numeric_limits<std::uint64_t>::max();

/// Which child views are handed to the memoizing routine.
enum class DensePolicy {
  /// Only views passing the Turán density gate (and seeking more than
  /// triangles).
  turan,
  /// Every child view; used to build the complete trie on small fixtures.
  always,
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TimeLimitExceeded : public std::runtime_error {
 public:
  TimeLimitExceeded() : std::runtime_error("time limit exceeded") {}
};

struct EngineConfig {
  std::uint32_t k = 3;
  bool memo_enabled = true;
  bool prune_enabled = true;
  /// Soft bound on k * (trie nodes); the hard bound is twice this.
  std::uint64_t tau = kDefaultTau;
  std::uint32_t threads = 1;
  DensePolicy dense_policy = DensePolicy::turan;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Throws ConfigError on k < 2, tau == 0 or threads == 0.
  void validate() const;
};

struct EngineStats {
  std::uint64_t listing_calls = 0;
  std::uint64_t listing_dense_calls = 0;
  std::uint64_t listing_ist_calls = 0;
  std::uint64_t pruned_subgraphs = 0;
  std::uint64_t trie_resets = 0;
  std::uint64_t peak_weighted_size = 0;

  /// Sums counters; takes the max of peaks.
  EngineStats& operator+=(const EngineStats& other);
  friend bool operator==(const EngineStats&, const EngineStats&) = default;
};

enum class CheckpointKind { soft, hard };

/// Instrumentation hooks; all default to no-ops.
class EngineObserver {
 public:
  virtual ~EngineObserver() = default;

  /// After each listing_dense call. `computed` counts path nodes that were
  /// not yet memoized at level l and were therefore processed from scratch.
  virtual void on_dense_call(std::span<const VertexId> /*seq*/, std::uint32_t /*l*/,
                             std::size_t /*computed*/) {}
  /// Right after Marked[l] is set on t.
  virtual void on_mark(const Trie& /*trie*/, NodeId /*t*/, std::uint32_t /*l*/) {}
  /// Each space-bound check; `weighted_size` is observed before any reset.
  virtual void on_checkpoint(CheckpointKind /*kind*/, std::uint64_t /*weighted_size*/,
                             std::uint64_t /*bound*/, bool /*reset*/) {}
};

/// Turán gate for a view in which cliques of size `sought` will be listed:
/// sought > 3, at least two vertices, and
/// density > ((sought-1)/sought) * (n/(n-1)), evaluated exactly in integers.
bool is_dense(const SubDag& view, std::uint32_t sought) noexcept;

/// Ordering, orientation and the whole-graph view, computed once per graph
/// and shared read-only between workers.
struct PreparedGraph {
  Ordering ordering;
  Dag dag;
  SubDag root;

  static PreparedGraph build(const UndirectedGraph& g);
};

/// One single-threaded listing engine with a private trie.
///
/// The memo trie is reset only at soft checkpoints (after each depth-1
/// subtask) and hard checkpoints (before each entry into listing_dense from
/// listing); no trie handle is live across either point.
class Engine {
 public:
  Engine(const SubDag& root, const EngineConfig& config, CliqueSink& sink,
         EngineObserver* observer = nullptr, const std::atomic<bool>* stop = nullptr);

  /// listing(root, k, {}) with soft checkpoints after every depth-1 subtask.
  void run();

  /// The depth-1 subtask of root-local vertex u, followed by a soft
  /// checkpoint. Does not count the top-level listing call.
  void run_subtask(std::uint32_t u);

  /// Lists the l-cliques of `view` combined with `prefix`; needs
  /// prefix.size() + l == k.
  void listing(const SubDag& view, std::uint32_t l, std::span<const VertexId> prefix);

  /// Memoizing variant; returns the trie node of the view's identifying
  /// sequence.
  NodeId listing_dense(const SubDag& view, std::uint32_t l, std::span<const VertexId> prefix);

  /// Retrieves the l-cliques of the trie node t (which must be l-memoized)
  /// combined with `prefix`.
  void listing_ist(NodeId t, std::uint32_t l, std::span<const VertexId> prefix);

  void soft_checkpoint();
  void hard_checkpoint();

  const EngineStats& stats() const noexcept { return stats_; }
  const Trie& trie() const noexcept { return trie_; }
  const EngineConfig& config() const noexcept { return config_; }

 private:
  void listing_rec(const SubDag& view, std::uint32_t l, std::size_t depth);
  void visit(const SubDag& view, std::uint32_t u, std::uint32_t l, std::size_t depth);
  NodeId dense_rec(const SubDag& view, std::uint32_t l, std::size_t depth);
  void ist_rec(NodeId t, std::uint32_t l);

  void set_sibling_link(std::span<const NodeId> path, std::size_t i, std::uint32_t l);
  void emit_edges(const SubDag& view);
  void emit_current() { sink_.emit(clique_); }
  void note_size() noexcept;
  void tick();
  void begin(std::span<const VertexId> prefix, std::uint32_t l);

  const SubDag& root_;
  EngineConfig config_;
  CliqueSink& sink_;
  EngineObserver* observer_;
  const std::atomic<bool>* stop_;

  Trie trie_;
  EngineStats stats_;
  ViewBuilder builder_;
  Pruner pruner_;
  std::vector<VertexId> clique_;
  std::vector<SubDag> views_;
  std::vector<std::vector<NodeId>> paths_;
  std::vector<VertexId> seq_;
  std::uint32_t ticks_ = 0;
};

/// Orders, orients and lists every k-clique of g on the calling thread.
EngineStats list_k_cliques(const UndirectedGraph& g, const EngineConfig& config, CliqueSink& sink,
                           EngineObserver* observer = nullptr);

}  // namespace kcl

#endif  // KCL_ENGINE_HPP
