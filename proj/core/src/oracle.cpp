#include "kcl/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace kcl::oracle {

std::vector<std::vector<VertexId>> brute_force_k_cliques(const UndirectedGraph& g, std::uint32_t k) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceMaxVertices) throw std::invalid_argument("brute force limited to 64 vertices");
  std::vector<std::vector<VertexId>> out;
  if (k == 0) return out;

  std::vector<std::uint64_t> adj(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) adj[u] |= std::uint64_t{1} << v;
  }

  std::vector<VertexId> chosen;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t candidates) {
    if (chosen.size() == k) {
      out.push_back(chosen);
      return;
    }
    while (candidates) {
      const auto v = static_cast<VertexId>(__builtin_ctzll(candidates));
      candidates &= candidates - 1;
      chosen.push_back(v);
      // only higher ids, so each clique is produced once, in increasing order
      extend(adj[v] & candidates);
      chosen.pop_back();
    }
  };
  extend(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return out;
}

std::uint32_t max_clique_size(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCliqueMaxVertices) throw std::invalid_argument("max clique limited to 200 vertices");
  using Bits = std::bitset<kMaxCliqueMaxVertices>;
  std::vector<Bits> adj(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) adj[u].set(v);
  }

  std::uint32_t best = 0;
  std::function<void(std::uint32_t, Bits)> expand = [&](std::uint32_t size, Bits candidates) {
    if (candidates.none()) {
      best = std::max(best, size);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!candidates.test(v)) continue;
      if (size + candidates.count() <= best) return;
      expand(size + 1, candidates & adj[v]);
      candidates.reset(v);
    }
  };
  Bits all;
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  expand(0, all);
  return best;
}

UndirectedGraph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(i, j);
    }
  }
  return UndirectedGraph::from_dense_edges(n, edges);
}

FrameworkTrace reference_framework(const UndirectedGraph& g, std::uint32_t k) {
  FrameworkTrace trace;
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> higher(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v > u) higher[u].push_back(v);
    }
  }

  std::function<void(const std::vector<VertexId>&, std::uint32_t)> listing =
      [&](const std::vector<VertexId>& vertices, std::uint32_t l) {
        ++trace.listing_calls;
        if (l == 2) {
          for (VertexId u : vertices) {
            for (VertexId v : higher[u]) {
              trace.cliques += std::binary_search(vertices.begin(), vertices.end(), v);
            }
          }
          return;
        }
        for (VertexId u : vertices) {
          std::vector<VertexId> sub;
          std::set_intersection(vertices.begin(), vertices.end(), higher[u].begin(), higher[u].end(),
                                std::back_inserter(sub));
          listing(sub, l - 1);
        }
      };

  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  if (k >= 2) listing(all, k);
  return trace;
}

std::uint32_t max_soft_embedding(const SubDag& view, std::uint32_t u) {
  // embeds(l, v): the root of an l-tree maps to v and its children
  // c_1..c_{l-1} (c_i rooting an i-tree) map to out-neighbors
  // w_1 > w_2 > ... > w_{l-1} in rank, each with embeds(i, w_i).
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> memo;
  std::function<bool(std::uint32_t, std::uint32_t)> embeds = [&](std::uint32_t l, std::uint32_t v) -> bool {
    if (l == 1) return true;
    auto key = std::make_pair(l, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // out(v) is listed from the highest rank down.
    auto nbrs = view.out(v);
    const std::size_t d = nbrs.size();
    bool found = false;
    if (d + 1 >= l) {
      for (std::uint32_t mask = 0; mask < (1u << d) && !found; ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != l - 1) continue;
        std::uint32_t i = 1;
        bool ok = true;
        for (std::size_t b = 0; b < d && ok; ++b) {
          if (mask & (1u << b)) ok = embeds(i++, nbrs[b]);
        }
        found = ok;
      }
    }
    memo.emplace(key, found);
    return found;
  };

  std::uint32_t best = 1;
  for (std::uint32_t l = 2; l <= view.out(u).size() + 1; ++l) {
    if (embeds(l, u)) best = l;
  }
  return best;
}

bool has_clique_with_minimum(const SubDag& view, std::uint32_t u, std::uint32_t l) {
  if (l == 0) return false;
  if (l == 1) return true;
  const std::size_t n = view.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b : view.out(a)) adj[a][b] = adj[b][a] = true;
  }
  auto nbrs = view.out(u);
  std::vector<std::uint32_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    if (chosen.size() + 1 == l) return true;
    for (std::size_t i = from; i < nbrs.size(); ++i) {
      const std::uint32_t w = nbrs[i];
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) { return adj[c][w]; })) {
        chosen.push_back(w);
        if (search(i + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  return search(0);
}

}  // namespace kcl::oracle
