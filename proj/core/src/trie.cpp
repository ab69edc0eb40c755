#include "kcl/trie.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kcl {

Trie::Trie(std::uint32_t k) : k_(k), levels_(k > 2 ? k - 2 : 0) { reset(); }

void Trie::reset() {
  labels_.assign(1, kNone);
  parents_.assign(1, kRoot);
  link_base_.assign(1, kNone);
  child_links_.clear();
  sibling_links_.clear();
  marks_.clear();
  children_.clear();
}

std::size_t Trie::insert_path(std::span<const VertexId> seq, std::vector<NodeId>& path) {
  path.clear();
  path.push_back(kRoot);
  std::size_t created = 0;
  NodeId cur = kRoot;
  for (VertexId v : seq) {
    auto [it, inserted] = children_.try_emplace(child_key(cur, v), static_cast<NodeId>(labels_.size()));
    if (inserted) {
      labels_.push_back(v);
      parents_.push_back(cur);
      link_base_.push_back(kNone);
      ++created;
    }
    cur = it->second;
    path.push_back(cur);
  }
  return created;
}

std::vector<NodeId> Trie::insert_path(std::span<const VertexId> seq) {
  std::vector<NodeId> path;
  insert_path(seq, path);
  return path;
}

NodeId Trie::find(std::span<const VertexId> seq) const {
  NodeId cur = kRoot;
  for (VertexId v : seq) {
    auto it = children_.find(child_key(cur, v));
    if (it == children_.end()) return kUnset;
    cur = it->second;
  }
  return cur;
}

std::size_t Trie::depth(NodeId t) const noexcept {
  std::size_t d = 0;
  for (; t != kRoot; t = parents_[t]) ++d;
  return d;
}

std::vector<VertexId> Trie::path_labels(NodeId t) const {
  std::vector<VertexId> out;
  for (; t != kRoot; t = parents_[t]) out.push_back(labels_[t]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint32_t Trie::slot(NodeId t, std::uint32_t l) {
  std::uint32_t& b = link_base_[t];
  if (b == kNone) {
    b = static_cast<std::uint32_t>(child_links_.size());
    child_links_.resize(child_links_.size() + levels_, kUnset);
    sibling_links_.resize(sibling_links_.size() + levels_, kUnset);
    marks_.resize(marks_.size() + levels_, 0);
  }
  return b + l - 2;
}

bool Trie::validate_memoized(NodeId t, std::uint32_t l) const {
  std::unordered_map<std::uint64_t, bool> memo;
  std::function<bool(NodeId, std::uint32_t)> check = [&](NodeId node, std::uint32_t level) -> bool {
    if (node == kRoot || level <= 1) return true;
    if (level >= k_) return false;
    const std::uint64_t key = static_cast<std::uint64_t>(node) * (k_ + 1) + level;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    NodeId c = child_link(node, level);
    NodeId s = sibling_link(node, level);
    if (c != kUnset && s != kUnset) ok = check(s, level) && check(c, level - 1);
    memo.emplace(key, ok);
    return ok;
  };
  return check(t, l);
}

std::string Trie::dump(const std::function<std::string(VertexId)>& label_name) const {
  auto name = [&](VertexId v) { return label_name ? label_name(v) : std::to_string(v); };
  auto render = [&](NodeId t) {
    if (t == kRoot) return std::string("-");
    std::string s;
    for (VertexId v : path_labels(t)) {
      if (!s.empty()) s += ',';
      s += name(v);
    }
    return s;
  };

  std::vector<std::pair<std::vector<VertexId>, NodeId>> nodes;
  for (NodeId t = 1; t < labels_.size(); ++t) nodes.emplace_back(path_labels(t), t);
  std::sort(nodes.begin(), nodes.end());

  std::ostringstream out;
  for (const auto& [path, t] : nodes) {
    out << "path=" << render(t) << " marked=";
    std::string levels;
    for (std::uint32_t l = 2; l < k_; ++l) {
      if (marked(t, l)) levels += (levels.empty() ? "" : ",") + std::to_string(l);
    }
    out << (levels.empty() ? "-" : levels);
    for (std::uint32_t l = 2; l < k_; ++l) {
      if (NodeId c = child_link(t, l); c != kUnset) out << " clink[" << l << "]=" << render(c);
      if (NodeId s = sibling_link(t, l); s != kUnset) out << " slink[" << l << "]=" << render(s);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kcl
