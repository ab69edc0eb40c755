#include "kcl/prune.hpp"

namespace kcl {

void soft_embedding_ranks(const SubDag& view, std::vector<std::uint32_t>& ranks) {
  const auto n = static_cast<std::uint32_t>(view.size());
  ranks.assign(n, 1);
  // Local index 0 is the highest rank, and out-lists are already ordered
  // from the highest-ranked neighbor down.
  for (std::uint32_t u = 0; u < n; ++u) {
    std::uint32_t r = 1;
    for (std::uint32_t w : view.out(u)) {
      if (r <= ranks[w]) ++r;
    }
    ranks[u] = r;
  }
}

std::vector<std::uint32_t> soft_embedding_ranks(const SubDag& view) {
  std::vector<std::uint32_t> ranks;
  soft_embedding_ranks(view, ranks);
  return ranks;
}

std::uint32_t apex_rank(const SubDag& child, std::span<const std::uint32_t> child_ranks) noexcept {
  std::uint32_t r = 1;
  for (std::uint32_t w = 0; w < child.size(); ++w) {
    if (r <= child_ranks[w]) ++r;
  }
  return r;
}

bool can_prune(const SubDag& view, std::uint32_t u, std::uint32_t l) {
  if (view.out(u).size() + 1 < l) return true;
  SubDag child;
  ViewBuilder().out_subgraph(view, u, child);
  return Pruner().prunable(child, l);
}

}  // namespace kcl
