#ifndef KCL_TRIE_HPP
#define KCL_TRIE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcl/graph.hpp"

namespace kcl {

/// Arena index of a trie node. Handles are invalidated by Trie::reset().
using NodeId = std::uint32_t;

/// Prefix tree over identifying sequences of induced subgraphs, carrying the
/// per-level child/sibling links and Marked flags used for clique retrieval.
///
/// Level-l links exist for 2 <= l <= k-1 and are stored lazily per node.
/// Level-1 links are implicit: the child link is the root and the sibling
/// link is the parent. A child link equal to the root means the inclusive
/// set at that level is empty.
class Trie {
 public:
  static constexpr NodeId kRoot = 0;
  static constexpr NodeId kUnset = static_cast<NodeId>(-1);

  explicit Trie(std::uint32_t k);

  std::uint32_t k() const noexcept { return k_; }

  /// Non-root node count (N).
  std::size_t node_count() const noexcept { return labels_.size() - 1; }

  /// k * N, the quantity compared against the space bounds.
  std::uint64_t weighted_size() const noexcept {
    return static_cast<std::uint64_t>(k_) * node_count();
  }

  /// Inserts a strictly rank-descending sequence. On return `path` holds
  /// <root, t_1, ..., t_|seq|>. Returns the number of nodes created.
  std::size_t insert_path(std::span<const VertexId> seq, std::vector<NodeId>& path);
  std::vector<NodeId> insert_path(std::span<const VertexId> seq);

  /// Node whose root path spells seq, or kUnset.
  NodeId find(std::span<const VertexId> seq) const;

  VertexId label(NodeId t) const noexcept { return labels_[t]; }
  NodeId parent(NodeId t) const noexcept { return parents_[t]; }
  std::size_t depth(NodeId t) const noexcept;
  std::vector<VertexId> path_labels(NodeId t) const;

  NodeId child_link(NodeId t, std::uint32_t l) const noexcept {
    if (l == 1) return kRoot;
    std::uint32_t b = link_base_[t];
    return b == kNone ? kUnset : child_links_[b + l - 2];
  }
  NodeId sibling_link(NodeId t, std::uint32_t l) const noexcept {
    if (l == 1) return parents_[t];
    std::uint32_t b = link_base_[t];
    return b == kNone ? kUnset : sibling_links_[b + l - 2];
  }
  bool marked(NodeId t, std::uint32_t l) const noexcept {
    std::uint32_t b = link_base_[t];
    return b != kNone && marks_[b + l - 2] != 0;
  }

  void set_child_link(NodeId t, std::uint32_t l, NodeId target) { child_links_[slot(t, l)] = target; }
  void set_sibling_link(NodeId t, std::uint32_t l, NodeId target) { sibling_links_[slot(t, l)] = target; }
  void mark(NodeId t, std::uint32_t l) { marks_[slot(t, l)] = 1; }

  /// Drops every node; all outstanding handles become invalid.
  void reset();

  /// Structural check of the l-memoized property: links at l exist, the
  /// l-sibling target is l-memoized and the l-child target is
  /// (l-1)-memoized. The root is l-memoized for every l; every node is
  /// 1-memoized through its implicit links.
  bool validate_memoized(NodeId t, std::uint32_t l) const;

  /// One line per non-root node, sorted by path:
  /// "path=<labels> marked=<levels> clink[l]=<path> slink[l]=<path> ...".
  /// Labels are joined with ',' and the root path is printed as '-'.
  std::string dump(const std::function<std::string(VertexId)>& label_name = {}) const;

 private:
  std::uint32_t slot(NodeId t, std::uint32_t l);

  static std::uint64_t child_key(NodeId parent, VertexId label) noexcept {
    return (static_cast<std::uint64_t>(parent) << 32) | label;
  }

  std::uint32_t k_;
  std::uint32_t levels_;  // k - 2 link slots per node
  std::vector<VertexId> labels_;
  std::vector<NodeId> parents_;
  std::vector<std::uint32_t> link_base_;
  std::vector<NodeId> child_links_;
  std::vector<NodeId> sibling_links_;
  std::vector<std::uint8_t> marks_;
  std::unordered_map<std::uint64_t, NodeId> children_;
};

}  // namespace kcl

#endif  // KCL_TRIE_HPP
