#ifndef KCL_ORACLE_HPP
#define KCL_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "kcl/graph.hpp"

// Reference implementations for testing. Nothing here shares code with the
// listing engine beyond the graph types.
namespace kcl::oracle {

inline constexpr std::size_t kBruteForceMaxVertices = 64;
inline constexpr std::size_t kMaxCliqueMaxVertices = 200;

/// Every k-clique by backtracking over adjacency bitmasks, each clique sorted
/// ascending, the list in lexicographic order. Throws std::invalid_argument
/// when n exceeds kBruteForceMaxVertices.
std::vector<std::vector<VertexId>> brute_force_k_cliques(const UndirectedGraph& g, std::uint32_t k);

/// Clique number by branch and bound. 0 for the empty graph.
std::uint32_t max_clique_size(const UndirectedGraph& g);

/// G(n, p) from std::mt19937_64 seeded with `seed`: pairs (i, j), i < j, are
/// visited in lexicographic order, one 64-bit draw x each, and the edge is
/// kept when (x >> 11) * 2^-53 < p.
UndirectedGraph random_gnp(std::size_t n, double p, std::uint64_t seed);

struct FrameworkTrace {
  std::uint64_t listing_calls = 0;
  std::uint64_t cliques = 0;
};

/// The plain recursive framework (recurse on every out-neighborhood, report
/// edges at l = 2), instrumented to count its listing calls. Orients by
/// vertex id and works on sorted vertex sets.
FrameworkTrace reference_framework(const UndirectedGraph& g, std::uint32_t k);

/// Largest l admitting a soft embedding of an l-tree rooted at view-local u,
/// found by exhaustive search over rank-descending out-neighbor sequences.
std::uint32_t max_soft_embedding(const SubDag& view, std::uint32_t u);

/// Whether the view has an l-clique whose minimum vertex is view-local u.
bool has_clique_with_minimum(const SubDag& view, std::uint32_t u, std::uint32_t l);

}  // namespace kcl::oracle

#endif  // KCL_ORACLE_HPP
