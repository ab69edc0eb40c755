#include "kcl/sink.hpp"

#include <algorithm>
#include <charconv>

namespace kcl {

void CollectingSink::emit(std::span<const VertexId> clique) {
  auto& c = cliques_.emplace_back(clique.begin(), clique.end());
  std::sort(c.begin(), c.end());
}

void CollectingSink::join(CliqueSink& worker) {
  auto& other = dynamic_cast<CollectingSink&>(worker);
  cliques_.insert(cliques_.end(), std::make_move_iterator(other.cliques_.begin()),
                  std::make_move_iterator(other.cliques_.end()));
  other.cliques_.clear();
}

std::vector<std::vector<VertexId>> CollectingSink::sorted() const {
  auto out = cliques_;
  std::sort(out.begin(), out.end());
  return out;
}

WriterSink::WriterSink(std::ostream& out, const UndirectedGraph& graph)
    : shared_(std::make_shared<Shared>()), graph_(&graph) {
  shared_->out = &out;
}

WriterSink::WriterSink(std::shared_ptr<Shared> shared, const UndirectedGraph& graph)
    : shared_(std::move(shared)), graph_(&graph) {}

WriterSink::~WriterSink() { flush(); }

void WriterSink::emit(std::span<const VertexId> clique) {
  scratch_.clear();
  for (VertexId v : clique) scratch_.push_back(graph_->original_label(v));
  std::sort(scratch_.begin(), scratch_.end());
  char num[24];
  for (std::size_t i = 0; i < scratch_.size(); ++i) {
    if (i) buffer_ += ' ';
    auto [end, ec] = std::to_chars(num, num + sizeof num, scratch_[i]);
    buffer_.append(num, end);
  }
  buffer_ += '\n';
  ++count_;
  if (buffer_.size() >= kFlushBytes) flush();
}

std::unique_ptr<CliqueSink> WriterSink::make_worker() {
  return std::unique_ptr<CliqueSink>(new WriterSink(shared_, *graph_));
}

void WriterSink::join(CliqueSink& worker) {
  auto& other = dynamic_cast<WriterSink&>(worker);
  other.flush();
  count_ += other.count_;
}

void WriterSink::flush() {
  if (buffer_.empty()) return;
  std::lock_guard lock(shared_->mutex);
  shared_->out->write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  buffer_.clear();
}

}  // namespace kcl
