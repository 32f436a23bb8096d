#include "l3col/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "l3col/errors.hpp"

namespace l3col {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<Edge> normal;
  normal.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    normal.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normal.begin(), normal.end());
  normal.erase(std::unique(normal.begin(), normal.end()), normal.end());

  std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : normal) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : normal) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));

  if (n > 0 && n <= kMatrixLimit) {
    words_ = bits::words_for(n);
    matrix_.assign(words_ * static_cast<std::size_t>(n), 0);
    for (const Edge& e : normal) {
      bits::set({matrix_.data() + e.u * words_, words_}, e.v);
      bits::set({matrix_.data() + e.v * words_, words_}, e.u);
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!matrix_.empty()) return bits::test(row(u), v);
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbours(u))
      if (u < v) out.push_back({u, v});
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbours(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), index[w]});
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e = {perm[e.u], perm[e.v]};
  return Graph(g.order(), edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbours(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool diameter_at_most(const Graph& g, int bound) {
  const int n = g.order();
  if (bound == 2 && g.has_matrix() && n > 0) {
    // Every vertex must reach all others within two steps.
    const std::size_t words = g.words();
    std::vector<bits::Word> reach(words);
    for (Vertex u = 0; u < n; ++u) {
      std::copy(g.row(u).begin(), g.row(u).end(), reach.begin());
      bits::set(reach, u);
      for (Vertex w : g.neighbours(u)) {
        auto r = g.row(w);
        for (std::size_t i = 0; i < words; ++i) reach[i] |= r[i];
      }
      if (bits::count(words, [&](std::size_t i) { return reach[i]; }) != n) return false;
    }
    return true;
  }
  for (Vertex s = 0; s < n; ++s)
    for (int d : bfs_distances(g, s))
      if (d < 0 || d > bound) return false;
  return true;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  Bipartition out;
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbours(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          frontier.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? out.part_a : out.part_b).push_back(v);
  return out;
}

bool is_complete_bipartite(const Graph& g, const Bipartition& b) {
  return g.edge_count() == b.part_a.size() * b.part_b.size();
}

}  // namespace l3col
