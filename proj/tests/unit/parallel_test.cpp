#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "kcl/oracle.hpp"
#include "kcl/parallel.hpp"

namespace kcl {
namespace {

using testing::kConfigs;
using testing::make_config;

TEST(DispatchChunk, Sizes) {
  EXPECT_EQ(dispatch_chunk(0, 4), 1u);
  EXPECT_EQ(dispatch_chunk(100, 8), 1u);
  EXPECT_EQ(dispatch_chunk(10000, 8), 19u);
  EXPECT_EQ(dispatch_chunk(10000, 0), 156u);
}

TEST(NodeParallel, SameCliquesForEveryThreadCount) {
  auto g = oracle::random_gnp(120, 0.3, 17);
  for (const auto& c : kConfigs) {
    auto config = make_config(5, c.memo, c.prune);
    CollectingSink reference;
    list_k_cliques(g, config, reference);
    for (std::uint32_t threads : {1u, 2u, 4u, 8u}) {
      config.threads = threads;
      CollectingSink sink;
      node_parallel_list(g, config, sink);
      EXPECT_EQ(sink.sorted(), reference.sorted()) << c.name << " threads=" << threads;
    }
  }
}

TEST(NodeParallel, SingleThreadMatchesSequentialExactly) {
  auto g = oracle::random_gnp(80, 0.4, 3);
  auto config = make_config(4, true, true);
  CollectingSink a;
  CollectingSink b;
  const EngineStats sa = list_k_cliques(g, config, a);
  const EngineStats sb = node_parallel_list(g, config, b);
  EXPECT_EQ(a.cliques(), b.cliques());
  EXPECT_EQ(sa, sb);
}

TEST(NodeParallel, BaselineCallCountIndependentOfThreads) {
  auto g = oracle::random_gnp(100, 0.3, 8);
  auto config = make_config(5, false, false);
  CountingSink one;
  const std::uint64_t calls = node_parallel_list(g, config, one).listing_calls;
  for (std::uint32_t threads : {2u, 8u}) {
    config.threads = threads;
    CountingSink sink;
    EXPECT_EQ(node_parallel_list(g, config, sink).listing_calls, calls);
    EXPECT_EQ(sink.count(), one.count());
  }
}

TEST(NodeParallel, KTwoWithThreads) {
  auto g = oracle::random_gnp(50, 0.2, 1);
  auto config = make_config(2, true, true);
  config.threads = 4;
  CountingSink sink;
  node_parallel_list(g, config, sink);
  EXPECT_EQ(sink.count(), g.edge_count());
}

TEST(NodeParallel, DenseGraphCounts) {
  auto g = oracle::random_gnp(200, 0.3, 11);
  auto config = make_config(6, true, true);
  CountingSink one;
  node_parallel_list(g, config, one);
  for (std::uint32_t threads : {2u, 4u, 8u}) {
    config.threads = threads;
    CountingSink sink;
    node_parallel_list(g, config, sink);
    EXPECT_EQ(sink.count(), one.count()) << threads;
  }
}

TEST(NodeParallel, TimeLimitPropagates) {
  auto g = oracle::random_gnp(150, 0.6, 2);
  auto config = make_config(7, false, false);
  config.threads = 4;
  config.deadline = std::chrono::steady_clock::now();
  CountingSink sink;
  EXPECT_THROW(node_parallel_list(g, config, sink), TimeLimitExceeded);
}

TEST(WriterSink, WritesOriginalLabelsFromWorkers) {
  std::istringstream in("10 20\n20 30\n10 30\n30 40\n");
  auto g = load_edge_list(in);
  std::ostringstream out;
  {
    WriterSink sink(out, g);
    auto config = make_config(3, true, true);
    config.threads = 2;
    node_parallel_list(g, config, sink);
    EXPECT_EQ(sink.count(), 1u);
  }
  EXPECT_EQ(out.str(), "10 20 30\n");
}

}  // namespace
}  // namespace kcl
