#ifndef KCL_SINK_HPP
#define KCL_SINK_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kcl/graph.hpp"

namespace kcl {

/// Consumer of listed k-cliques. Vertices arrive as dense ids in no
/// particular order.
///
/// A sink is used by one thread at a time. Parallel runs call make_worker()
/// once per worker, feed each worker sink from its own thread, and hand every
/// worker back through join() after the workers stop.
class CliqueSink {
 public:
  virtual ~CliqueSink() = default;

  virtual void emit(std::span<const VertexId> clique) = 0;
  virtual std::unique_ptr<CliqueSink> make_worker() = 0;
  virtual void join(CliqueSink& worker) = 0;

  virtual std::uint64_t count() const noexcept = 0;
};

class CountingSink final : public CliqueSink {
 public:
  void emit(std::span<const VertexId>) override { ++count_; }
  std::unique_ptr<CliqueSink> make_worker() override { return std::make_unique<CountingSink>(); }
  void join(CliqueSink& worker) override { count_ += worker.count(); }
  std::uint64_t count() const noexcept override { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/// Keeps every clique, each sorted ascending by dense id.
class CollectingSink final : public CliqueSink {
 public:
  void emit(std::span<const VertexId> clique) override;
  std::unique_ptr<CliqueSink> make_worker() override { return std::make_unique<CollectingSink>(); }
  void join(CliqueSink& worker) override;
  std::uint64_t count() const noexcept override { return cliques_.size(); }

  const std::vector<std::vector<VertexId>>& cliques() const noexcept { return cliques_; }
  /// Cliques in lexicographic order.
  std::vector<std::vector<VertexId>> sorted() const;

 private:
  std::vector<std::vector<VertexId>> cliques_;
};

/// Writes one clique per line as original labels, ascending, space-separated.
/// Worker sinks buffer lines and flush them under the parent's lock.
class WriterSink final : public CliqueSink {
 public:
  WriterSink(std::ostream& out, const UndirectedGraph& graph);
  ~WriterSink() override;

  void emit(std::span<const VertexId> clique) override;
  std::unique_ptr<CliqueSink> make_worker() override;
  void join(CliqueSink& worker) override;
  std::uint64_t count() const noexcept override { return count_; }

  void flush();

 private:
  struct Shared {
    std::ostream* out;
    std::mutex mutex;
  };

  WriterSink(std::shared_ptr<Shared> shared, const UndirectedGraph& graph);

  static constexpr std::size_t kFlushBytes = 1 << 16;

  std::shared_ptr<Shared> shared_;
  const UndirectedGraph* graph_;
  std::string buffer_;
  std::vector<OriginalLabel> scratch_;
  std::uint64_t count_ = 0;
};

}  // namespace kcl

#endif  // KCL_SINK_HPP
