#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace planted::detail {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

  explicit MaxFlow(std::size_t node_count);

  void add_edge(std::size_t from, std::size_t to, Capacity capacity);
  /// Adds two opposite arcs sharing one residual pair.
  void add_undirected(std::size_t a, std::size_t b, Capacity capacity);

  Capacity run(std::size_t source, std::size_t sink);

  /// Nodes reachable from the source in the final residual graph: the
  /// inclusion-minimal source side among all minimum cuts.
  std::vector<char> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    Capacity cap;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  Capacity push(std::size_t v, std::size_t sink, Capacity limit);

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace planted::detail
