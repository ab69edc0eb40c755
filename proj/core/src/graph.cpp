#include "kcl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

namespace kcl {

UndirectedGraph UndirectedGraph::from_dense_edges(std::size_t n,
                                                  std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::pair<VertexId, VertexId>> canon;
  canon.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
    if (a == b) continue;
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  UndirectedGraph g;
  g.labels_.resize(n);
  for (std::size_t v = 0; v < n; ++v) g.labels_[v] = static_cast<OriginalLabel>(v);

  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : canon) {
    ++deg[a];
    ++deg[b];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [a, b] : canon) {
    g.targets_[fill[a]++] = b;
    g.targets_[fill[b]++] = a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

UndirectedGraph UndirectedGraph::from_edges(std::span<const std::pair<OriginalLabel, OriginalLabel>> edges) {
  std::vector<OriginalLabel> labels;
  labels.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&](OriginalLabel x) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> dense;
  dense.reserve(edges.size());
  for (auto [a, b] : edges) dense.emplace_back(id_of(a), id_of(b));

  UndirectedGraph g = from_dense_edges(labels.size(), dense);
  g.labels_ = std::move(labels);
  return g;
}

bool UndirectedGraph::adjacent(VertexId u, VertexId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> UndirectedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

UndirectedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<OriginalLabel, OriginalLabel>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
    };
    skip_ws();
    if (p == end || *p == '#' || *p == '%') continue;

    OriginalLabel ends[2];
    for (auto& e : ends) {
      skip_ws();
      if (p == end) throw ParseError(lineno, "expected two vertex ids");
      auto [next, ec] = std::from_chars(p, end, e);
      if (ec != std::errc{}) throw ParseError(lineno, "malformed vertex id");
      if (next < end && !(*next == ' ' || *next == '\t' || *next == '\r' || *next == ',')) {
        throw ParseError(lineno, "malformed vertex id");
      }
      p = next;
    }
    // Remaining columns (weights, timestamps) are ignored.
    edges.emplace_back(ends[0], ends[1]);
  }
  return UndirectedGraph::from_edges(edges);
}

UndirectedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

Ordering Ordering::identity(std::size_t n) {
  Ordering o;
  o.rank.resize(n);
  o.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    o.rank[i] = static_cast<std::uint32_t>(i);
    o.order[i] = static_cast<VertexId>(i);
  }
  return o;
}

Ordering degeneracy_ordering(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  Ordering o;
  o.rank.assign(n, kNone);
  o.order.reserve(n);

  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    o.degeneracy = std::max<std::uint32_t>(o.degeneracy, static_cast<std::uint32_t>(d));
    o.rank[v] = static_cast<std::uint32_t>(o.order.size());
    o.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (o.rank[w] != kNone) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return o;
}

Dag::Dag(const UndirectedGraph& g, const Ordering& ordering) : rank_(ordering.rank) {
  const std::size_t n = g.vertex_count();
  offsets_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    std::size_t d = 0;
    for (VertexId v : g.neighbors(u)) d += rank_[v] > rank_[u];
    offsets_[u + 1] = offsets_[u] + d;
  }
  targets_.resize(offsets_[n]);
  for (VertexId u = 0; u < n; ++u) {
    auto* first = targets_.data() + offsets_[u];
    auto* it = first;
    for (VertexId v : g.neighbors(u)) {
      if (rank_[v] > rank_[u]) *it++ = v;
    }
    std::sort(first, it, [&](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
  }
}

std::size_t Dag::max_out_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t u = 0; u < vertex_count(); ++u) best = std::max(best, out_degree(static_cast<VertexId>(u)));
  return best;
}

bool Dag::has_edge(VertexId u, VertexId v) const noexcept {
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v,
                            [&](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
}

SubDag SubDag::whole(const Dag& dag) {
  std::vector<VertexId> all(dag.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  return induced(dag, all);
}

SubDag SubDag::induced(const Dag& dag, std::span<const VertexId> vertices) {
  SubDag view;
  view.vertices_.assign(vertices.begin(), vertices.end());
  std::sort(view.vertices_.begin(), view.vertices_.end(),
            [&](VertexId a, VertexId b) { return dag.rank(a) > dag.rank(b); });

  std::vector<std::uint32_t> local(dag.vertex_count(), kNone);
  for (std::uint32_t j = 0; j < view.vertices_.size(); ++j) local[view.vertices_[j]] = j;

  view.offsets_.assign(1, 0);
  std::vector<std::uint32_t> row;
  for (VertexId v : view.vertices_) {
    row.clear();
    for (VertexId w : dag.out(v)) {
      if (local[w] != kNone) row.push_back(local[w]);
    }
    std::sort(row.begin(), row.end());
    view.targets_.insert(view.targets_.end(), row.begin(), row.end());
    view.offsets_.push_back(static_cast<std::uint32_t>(view.targets_.size()));
  }
  return view;
}

std::uint32_t SubDag::local_index(VertexId v) const noexcept {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  return it == vertices_.end() ? kNone : static_cast<std::uint32_t>(it - vertices_.begin());
}

void ViewBuilder::out_subgraph(const SubDag& parent, std::uint32_t u, SubDag& child) {
  if (slot_.size() < parent.size()) slot_.resize(parent.size(), kNone);
  child.clear();
  auto nbrs = parent.out(u);
  for (std::uint32_t i = 0; i < nbrs.size(); ++i) {
    slot_[nbrs[i]] = i;
    child.vertices_.push_back(parent.vertices_[nbrs[i]]);
  }
  // parent out-lists are ascending in local index and the slot map is
  // monotone, so child rows come out sorted.
  for (std::uint32_t p : nbrs) {
    for (std::uint32_t q : parent.out(p)) {
      if (slot_[q] != kNone) child.targets_.push_back(slot_[q]);
    }
    child.offsets_.push_back(static_cast<std::uint32_t>(child.targets_.size()));
  }
  for (std::uint32_t p : nbrs) slot_[p] = kNone;
}

SubDag out_subgraph(const SubDag& parent, VertexId u) {
  std::uint32_t local = parent.local_index(u);
  if (local == kNone) throw std::out_of_range("vertex not in view");
  SubDag child;
  ViewBuilder().out_subgraph(parent, local, child);
  return child;
}

double density(const SubDag& view) noexcept {
  const double n = static_cast<double>(view.size());
  if (view.size() < 2) return 0.0;
  return static_cast<double>(view.edge_count()) / (n * (n - 1) / 2.0);
}

}  // namespace kcl
