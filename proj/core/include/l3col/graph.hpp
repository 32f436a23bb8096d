#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "l3col/bits.hpp"

namespace l3col {

/// Vertices are dense indices 0..n-1; external labels are mapped at the I/O boundary.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// Neighbour lists are sorted. Graphs up to `kMatrixLimit` vertices also carry
/// an adjacency bit matrix, which the pattern searches and the propagation
/// engine require; larger graphs support only list-based queries.
class Graph {
 public:
  static constexpr int kMatrixLimit = 8192;

  Graph() = default;

  /// Throws InputError on out-of-range endpoints or self-loops; parallel
  /// edges are merged.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbours(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v in ascending order.
  std::vector<Edge> edges() const;

  bool has_matrix() const noexcept { return !matrix_.empty() || n_ == 0; }
  std::size_t words() const noexcept { return words_; }
  /// Adjacency row of v as bits. Requires has_matrix().
  std::span<const bits::Word> row(Vertex v) const {
    return {matrix_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::size_t words_ = 0;
  std::vector<bits::Word> matrix_;
};

/// Same as the constructor; kept as a free function for symmetry with the I/O layer.
Graph build_graph(int n, std::span<const Edge> edges);

/// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Maximum BFS distance over all pairs; nullopt when g is disconnected.
/// Graphs with at most one vertex have diameter 0.
std::optional<int> diameter(const Graph& g);

/// True iff the diameter is at most `bound` (stops at the first far pair).
bool diameter_at_most(const Graph& g, int bound);

struct Bipartition {
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
};

/// A proper 2-colouring of g as two vertex classes, or nullopt if g has an
/// odd cycle. Vertex 0 of every component lands in part_a.
std::optional<Bipartition> bipartition(const Graph& g);

/// True iff every pair across the bipartition is an edge.
bool is_complete_bipartite(const Graph& g, const Bipartition& b);

}  // namespace l3col
