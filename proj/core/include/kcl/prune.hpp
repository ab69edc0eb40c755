#ifndef KCL_PRUNE_HPP
#define KCL_PRUNE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kcl/graph.hpp"

namespace kcl {

/// Soft-embedding ranks r(u) for every vertex of a view, indexed by local
/// index. Vertices are processed from the highest rank down; r(u) starts at 1
/// and grows by one for each out-neighbor w (visited highest rank first)
/// with r(u) <= r(w). Linear in the view's edge count.
void soft_embedding_ranks(const SubDag& view, std::vector<std::uint32_t>& ranks);
std::vector<std::uint32_t> soft_embedding_ranks(const SubDag& view);

/// r(u) for a vertex u whose out-neighborhood view is `child`, as if u were
/// prepended to child below every vertex in rank. `child_ranks` must hold
/// soft_embedding_ranks(child).
std::uint32_t apex_rank(const SubDag& child, std::span<const std::uint32_t> child_ranks) noexcept;

/// True when no l-clique can have parent-local vertex u as its minimum: either
/// u has fewer than l-1 out-neighbors in the view, or r(u) < l on the closed
/// out-neighborhood of u.
bool can_prune(const SubDag& view, std::uint32_t u, std::uint32_t l);

/// Reusable per-worker state for repeated prune checks.
class Pruner {
 public:
  /// Same predicate as can_prune, evaluated on an already built child view.
  bool prunable(const SubDag& child, std::uint32_t l) {
    if (child.size() + 1 < l) return true;
    soft_embedding_ranks(child, ranks_);
    return apex_rank(child, ranks_) < l;
  }

 private:
  std::vector<std::uint32_t> ranks_;
};

}  // namespace kcl

#endif  // KCL_PRUNE_HPP
