#include "kcl/engine.hpp"

#include <algorithm>

namespace kcl {

void EngineConfig::validate() const {
  if (k < 2) throw ConfigError("k must be at least 2");
  if (tau == 0) throw ConfigError("tau must be positive");
  if (threads == 0) throw ConfigError("threads must be positive");
}

EngineStats& EngineStats::operator+=(const EngineStats& other) {
  listing_calls += other.listing_calls;
  listing_dense_calls += other.listing_dense_calls;
  listing_ist_calls += other.listing_ist_calls;
  pruned_subgraphs += other.pruned_subgraphs;
  trie_resets += other.trie_resets;
  peak_weighted_size = std::max(peak_weighted_size, other.peak_weighted_size);
  return *this;
}

bool is_dense(const SubDag& view, std::uint32_t sought) noexcept {
  if (sought <= 3 || view.size() < 2) return false;
  // 2e / (n(n-1)) > (s-1)/s * n/(n-1)  <=>  2 e s > (s-1) n^2
  __extension__ using u128 = unsigned __int128;
  const u128 n = view.size();
  const u128 e = view.edge_count();
  return 2 * e * sought > (sought - 1) * n * n;
}

PreparedGraph PreparedGraph::build(const UndirectedGraph& g) {
  PreparedGraph p;
  p.ordering = degeneracy_ordering(g);
  p.dag = Dag(g, p.ordering);
  p.root = SubDag::whole(p.dag);
  return p;
}

Engine::Engine(const SubDag& root, const EngineConfig& config, CliqueSink& sink,
               EngineObserver* observer, const std::atomic<bool>* stop)
    : root_(root), config_(config), sink_(sink), observer_(observer), stop_(stop), trie_(config.k) {
  config_.validate();
  views_.resize(config_.k + 1);
  paths_.resize(config_.k + 1);
  clique_.reserve(config_.k);
}

void Engine::begin(std::span<const VertexId> prefix, std::uint32_t l) {
  if (prefix.size() + l != config_.k) throw std::invalid_argument("prefix size + l must equal k");
  clique_.assign(prefix.begin(), prefix.end());
}

void Engine::run() {
  clique_.clear();
  listing_rec(root_, config_.k, 0);
}

void Engine::run_subtask(std::uint32_t u) {
  clique_.clear();
  if (config_.k == 2) {
    clique_.push_back(root_.vertex(u));
    for (std::uint32_t w : root_.out(u)) {
      clique_.push_back(root_.vertex(w));
      emit_current();
      clique_.pop_back();
    }
    clique_.pop_back();
  } else {
    visit(root_, u, config_.k, 0);
  }
  soft_checkpoint();
}

void Engine::listing(const SubDag& view, std::uint32_t l, std::span<const VertexId> prefix) {
  begin(prefix, l);
  listing_rec(view, l, prefix.size());
}

NodeId Engine::listing_dense(const SubDag& view, std::uint32_t l, std::span<const VertexId> prefix) {
  if (l < 2) throw std::invalid_argument("listing_dense needs l >= 2");
  begin(prefix, l);
  return dense_rec(view, l, prefix.size());
}

void Engine::listing_ist(NodeId t, std::uint32_t l, std::span<const VertexId> prefix) {
  begin(prefix, l);
  ist_rec(t, l);
}

void Engine::emit_edges(const SubDag& view) {
  for (std::uint32_t a = 0; a < view.size(); ++a) {
    clique_.push_back(view.vertex(a));
    for (std::uint32_t b : view.out(a)) {
      clique_.push_back(view.vertex(b));
      emit_current();
      clique_.pop_back();
    }
    clique_.pop_back();
  }
}

void Engine::listing_rec(const SubDag& view, std::uint32_t l, std::size_t depth) {
  ++stats_.listing_calls;
  tick();
  if (l == 2) {
    emit_edges(view);
    return;
  }
  // Ascending rank: local indices run from the highest rank down.
  for (std::uint32_t u = static_cast<std::uint32_t>(view.size()); u-- > 0;) {
    visit(view, u, l, depth);
    if (depth == 0) soft_checkpoint();
  }
}

void Engine::visit(const SubDag& view, std::uint32_t u, std::uint32_t l, std::size_t depth) {
  if (config_.prune_enabled && view.out(u).size() + 1 < l) {
    ++stats_.pruned_subgraphs;
    return;
  }
  SubDag& child = views_[depth + 1];
  builder_.out_subgraph(view, u, child);
  if (config_.prune_enabled && pruner_.prunable(child, l)) {
    ++stats_.pruned_subgraphs;
    return;
  }
  clique_.push_back(view.vertex(u));
  const bool dense = config_.memo_enabled &&
                     (config_.dense_policy == DensePolicy::always || is_dense(child, l - 1));
  if (dense) {
    hard_checkpoint();
    dense_rec(child, l - 1, depth + 1);
  } else {
    listing_rec(child, l - 1, depth + 1);
  }
  clique_.pop_back();
}

void Engine::set_sibling_link(std::span<const NodeId> path, std::size_t i, std::uint32_t l) {
  NodeId target = Trie::kRoot;
  if (i >= 2) {
    const NodeId prev = path[i - 1];
    target = trie_.child_link(prev, l) != Trie::kRoot ? prev : trie_.sibling_link(prev, l);
  }
  trie_.set_sibling_link(path[i], l, target);
}

NodeId Engine::dense_rec(const SubDag& view, std::uint32_t l, std::size_t depth) {
  ++stats_.listing_dense_calls;
  tick();
  std::vector<NodeId>& path = paths_[depth];
  trie_.insert_path(view.vertices(), path);
  note_size();
  std::size_t computed = 0;

  if (l == 2) {
    emit_edges(view);
    for (std::size_t i = 1; i < path.size(); ++i) {
      const NodeId t = path[i];
      if (trie_.marked(t, 2)) continue;
      ++computed;
      set_sibling_link(path, i, 2);
      auto nbrs = view.out(static_cast<std::uint32_t>(i - 1));
      if (nbrs.empty()) {
        trie_.set_child_link(t, 2, Trie::kRoot);
      } else {
        seq_.clear();
        for (std::uint32_t w : nbrs) seq_.push_back(view.vertex(w));
        std::vector<NodeId>& sub = paths_[depth + 1];
        trie_.insert_path(seq_, sub);
        note_size();
        trie_.set_child_link(t, 2, sub.back());
      }
      trie_.mark(t, 2);
      if (observer_) observer_->on_mark(trie_, t, 2);
    }
  } else {
    for (std::size_t i = 1; i < path.size(); ++i) {
      const NodeId t = path[i];
      const auto u = static_cast<std::uint32_t>(i - 1);
      if (trie_.marked(t, l)) {
        clique_.push_back(view.vertex(u));
        ist_rec(trie_.child_link(t, l), l - 1);
        clique_.pop_back();
        continue;
      }
      ++computed;
      set_sibling_link(path, i, l);

      bool pruned = config_.prune_enabled && view.out(u).size() + 1 < l;
      SubDag& child = views_[depth + 1];
      if (!pruned) {
        builder_.out_subgraph(view, u, child);
        pruned = config_.prune_enabled && pruner_.prunable(child, l);
      }
      if (pruned) {
        ++stats_.pruned_subgraphs;
        trie_.set_child_link(t, l, Trie::kRoot);
      } else {
        clique_.push_back(view.vertex(u));
        const NodeId end = dense_rec(child, l - 1, depth + 1);
        clique_.pop_back();
        NodeId link = Trie::kRoot;
        if (end != Trie::kRoot) {
          link = trie_.child_link(end, l - 1) != Trie::kRoot ? end : trie_.sibling_link(end, l - 1);
        }
        trie_.set_child_link(t, l, link);
      }
      trie_.mark(t, l);
      if (observer_) observer_->on_mark(trie_, t, l);
    }
  }
  if (observer_) observer_->on_dense_call(view.vertices(), l, computed);
  return path.back();
}

void Engine::ist_rec(NodeId t, std::uint32_t l) {
  ++stats_.listing_ist_calls;
  tick();
  if (l == 0) {
    emit_current();
    return;
  }
  if (l == 1) {
    // Implicit level-1 links: child is the root, sibling is the parent.
    for (; t != Trie::kRoot; t = trie_.parent(t)) {
      clique_.push_back(trie_.label(t));
      emit_current();
      clique_.pop_back();
    }
    return;
  }
  for (; t != Trie::kRoot; t = trie_.sibling_link(t, l)) {
    clique_.push_back(trie_.label(t));
    ist_rec(trie_.child_link(t, l), l - 1);
    clique_.pop_back();
  }
}

void Engine::note_size() noexcept {
  stats_.peak_weighted_size = std::max(stats_.peak_weighted_size, trie_.weighted_size());
}

void Engine::soft_checkpoint() {
  const std::uint64_t size = trie_.weighted_size();
  const bool reset = size > config_.tau;
  if (reset) {
    trie_.reset();
    ++stats_.trie_resets;
  }
  if (observer_) observer_->on_checkpoint(CheckpointKind::soft, size, config_.tau, reset);
}

void Engine::hard_checkpoint() {
  const std::uint64_t size = trie_.weighted_size();
  const std::uint64_t bound = config_.tau > kUnboundedTau / 2 ? kUnboundedTau : 2 * config_.tau;
  const bool reset = size > bound;
  if (reset) {
    trie_.reset();
    ++stats_.trie_resets;
  }
  if (observer_) observer_->on_checkpoint(CheckpointKind::hard, size, bound, reset);
}

void Engine::tick() {
  if ((++ticks_ & 1023u) != 0) return;
  if (stop_ && stop_->load(std::memory_order_relaxed)) throw TimeLimitExceeded();
  if (config_.deadline && std::chrono::steady_clock::now() > *config_.deadline) throw TimeLimitExceeded();
}

EngineStats list_k_cliques(const UndirectedGraph& g, const EngineConfig& config, CliqueSink& sink,
                           EngineObserver* observer) {
  config.validate();
  const PreparedGraph prepared = PreparedGraph::build(g);
  Engine engine(prepared.root, config, sink, observer);
  engine.run();
  return engine.stats();
}

}  // namespace kcl
