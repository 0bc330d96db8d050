#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "planted/graph.hpp"

namespace planted {

/// Dense symmetric adjacency on n labelled vertices with an empty diagonal.
/// Row v is a bit set of v's neighbours.
class Observation {
 public:
  Observation() = default;
  explicit Observation(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return bits_[u * words_ + (v >> 6)] >> (v & 63) & 1U;
  }
  /// u != v required.
  void set_edge(Vertex u, Vertex v, bool present) noexcept {
    set_bit(u, v, present);
    set_bit(v, u, present);
  }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }
  std::size_t max_degree() const noexcept;
  std::size_t edge_count() const noexcept;

  Graph to_graph() const;
  static Observation from_graph(const Graph& g);

  friend bool operator==(const Observation&, const Observation&) = default;

 private:
  void set_bit(Vertex u, Vertex v, bool present) noexcept {
    std::uint64_t& word = bits_[u * words_ + (v >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (v & 63);
    word = present ? word | mask : word & ~mask;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Same text format as graph edge lists.
void write_observation(std::ostream& out, const Observation& obs);
Observation read_observation(std::istream& in);

}  // namespace planted
