#ifndef KCL_TESTS_FIXTURES_HPP
#define KCL_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kcl/engine.hpp"
#include "kcl/graph.hpp"
#include "kcl/oracle.hpp"
#include "kcl/sink.hpp"

namespace kcl::testing {

// The nine-vertex example graph; ids are u0..u8 and the identity order is its
// degeneracy ordering.
inline const char* kG9EdgeList =
    "0 2\n0 3\n0 4\n0 5\n0 7\n"
    "1 2\n1 3\n1 4\n1 5\n1 7\n"
    "2 3\n2 4\n2 7\n2 8\n"
    "3 6\n3 7\n3 8\n"
    "4 5\n4 6\n4 7\n4 8\n"
    "5 6\n5 7\n5 8\n"
    "6 7\n6 8\n"
    "7 8\n";

inline UndirectedGraph g9() {
  std::istringstream in(kG9EdgeList);
  return load_edge_list(in);
}

// K6 on {2..7} plus two non-adjacent apexes 0 and 1 joined to all of it. Both
// apexes peel first and share the out-neighborhood K6.
inline UndirectedGraph twin_apex_k6() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId a = 2; a < 8; ++a) {
    for (VertexId b = a + 1; b < 8; ++b) e.emplace_back(a, b);
    e.emplace_back(0, a);
    e.emplace_back(1, a);
  }
  return UndirectedGraph::from_dense_edges(8, e);
}

inline std::vector<std::vector<VertexId>> engine_cliques(const UndirectedGraph& g, const EngineConfig& config,
                                                         EngineStats* stats = nullptr) {
  CollectingSink sink;
  EngineStats s = list_k_cliques(g, config, sink);
  if (stats) *stats = s;
  return sink.sorted();
}

inline EngineConfig make_config(std::uint32_t k, bool memo, bool prune, std::uint64_t tau = kDefaultTau) {
  EngineConfig c;
  c.k = k;
  c.memo_enabled = memo;
  c.prune_enabled = prune;
  c.tau = tau;
  return c;
}

struct NamedConfig {
  const char* name;
  bool memo;
  bool prune;
};

inline constexpr NamedConfig kConfigs[] = {
    {"baseline", false, false},
    {"memo", true, false},
    {"memo+prune", true, true},
};

// Records dense calls, marks and checkpoints; checks the memoization
// invariants as it goes.
class RecordingObserver : public EngineObserver {
 public:
  struct Checkpoint {
    CheckpointKind kind;
    std::uint64_t size;
    std::uint64_t bound;
    bool reset;
  };

  void on_dense_call(std::span<const VertexId> seq, std::uint32_t l, std::size_t computed) override {
    ++dense_calls;
    if (computed == 0) return;
    auto key = std::make_pair(std::vector<VertexId>(seq.begin(), seq.end()), l);
    if (!computed_pairs.insert(key).second) ++repeated_computations;
    computed_log.push_back(key);
  }

  void on_mark(const Trie& trie, NodeId t, std::uint32_t l) override {
    ++marks;
    if (!trie.validate_memoized(t, l)) ++invalid_marks;
  }

  void on_checkpoint(CheckpointKind kind, std::uint64_t size, std::uint64_t bound, bool reset) override {
    checkpoints.push_back({kind, size, bound, reset});
    // Memoization is only promised within one trie lifetime.
    if (reset) computed_pairs.clear();
  }

  std::size_t dense_calls = 0;
  std::size_t marks = 0;
  std::size_t invalid_marks = 0;
  std::size_t repeated_computations = 0;
  std::set<std::pair<std::vector<VertexId>, std::uint32_t>> computed_pairs;
  std::vector<std::pair<std::vector<VertexId>, std::uint32_t>> computed_log;
  std::vector<Checkpoint> checkpoints;
};

}  // namespace kcl::testing

#endif  // KCL_TESTS_FIXTURES_HPP
