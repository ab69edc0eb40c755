#ifndef KCL_GRAPH_HPP
#define KCL_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kcl {

/// Dense vertex index in [0, n) after remapping.
using VertexId = std::uint32_t;

/// Identifier a vertex carried in the input file.
using OriginalLabel = std::int64_t;

inline constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph in CSR form. Adjacency lists are strictly
/// increasing, symmetric, and free of self-loops.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Builds a normalized graph from labelled edges: self-loops are dropped,
  /// duplicates collapsed, and labels remapped to 0..n-1 in ascending order.
  static UndirectedGraph from_edges(std::span<const std::pair<OriginalLabel, OriginalLabel>> edges);

  /// Edges already expressed over dense ids 0..n-1; labels become the ids.
  static UndirectedGraph from_dense_edges(std::size_t n,
                                          std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const noexcept;

  OriginalLabel original_label(VertexId v) const noexcept { return labels_[v]; }
  std::span<const OriginalLabel> original_labels() const noexcept { return labels_; }

  /// Each undirected edge once, as (smaller id, larger id), lexicographic.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<OriginalLabel> labels_;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// and blank lines are ignored; every other line needs two integer tokens.
UndirectedGraph load_edge_list(std::istream& in);
UndirectedGraph load_edge_list_file(const std::string& path);

/// A total order on the vertices. rank[v] is v's position (0 = minimum),
/// order[i] the vertex at position i.
struct Ordering {
  std::vector<std::uint32_t> rank;
  std::vector<VertexId> order;
  std::uint32_t degeneracy = 0;

  static Ordering identity(std::size_t n);
};

/// Min-degree peeling. Ties go to the smallest VertexId; degeneracy is the
/// largest degree observed at removal time.
Ordering degeneracy_ordering(const UndirectedGraph& g);

/// Orientation of an undirected graph from lower to higher rank.
class Dag {
 public:
  Dag() = default;
  Dag(const UndirectedGraph& g, const Ordering& ordering);

  std::size_t vertex_count() const noexcept { return rank_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  /// Out-neighbors sorted ascending by rank.
  std::span<const VertexId> out(VertexId u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t out_degree(VertexId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
  std::size_t max_out_degree() const noexcept;
  std::uint32_t rank(VertexId u) const noexcept { return rank_[u]; }
  bool has_edge(VertexId u, VertexId v) const noexcept;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::uint32_t> rank_;
};

inline Dag build_dag(const UndirectedGraph& g, const Ordering& ordering) { return Dag(g, ordering); }

/// Induced subgraph of a Dag, materialized with local indices.
///
/// Local index j refers to vertices()[j]; vertices are strictly descending by
/// rank, so the vertex list is the identifying sequence of the view. Local
/// out-lists hold local indices in ascending order, i.e. descending rank.
class SubDag {
 public:
  SubDag() = default;

  /// The whole Dag as a view.
  static SubDag whole(const Dag& dag);

  /// The view induced by an arbitrary vertex subset (any order, no repeats).
  static SubDag induced(const Dag& dag, std::span<const VertexId> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  VertexId vertex(std::uint32_t local) const noexcept { return vertices_[local]; }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const std::uint32_t> out(std::uint32_t local) const noexcept {
    return {targets_.data() + offsets_[local], targets_.data() + offsets_[local + 1]};
  }

  /// Local index of a vertex, or kNone.
  std::uint32_t local_index(VertexId v) const noexcept;

  void clear() {
    vertices_.clear();
    offsets_.assign(1, 0);
    targets_.clear();
  }

 private:
  friend class ViewBuilder;

  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

/// Builds child views without allocating once warmed up. Not thread-safe;
/// each worker owns one.
class ViewBuilder {
 public:
  /// child := parent restricted to the out-neighbors of parent-local vertex u.
  void out_subgraph(const SubDag& parent, std::uint32_t u, SubDag& child);

  /// Number of out-neighbors of parent-local u (the size the child would have).
  static std::size_t out_degree(const SubDag& parent, std::uint32_t u) noexcept {
    return parent.out(u).size();
  }

 private:
  std::vector<std::uint32_t> slot_;
};

/// Convenience overload keyed by VertexId; throws std::out_of_range if u is
/// not in the view.
SubDag out_subgraph(const SubDag& parent, VertexId u);

inline std::span<const VertexId> identifying_sequence(const SubDag& view) noexcept {
  return view.vertices();
}

/// edge_count / C(|V|, 2); 0 for views with fewer than two vertices.
double density(const SubDag& view) noexcept;

}  // namespace kcl

#endif  // KCL_GRAPH_HPP
