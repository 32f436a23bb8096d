#include "l3col/generate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "l3col/errors.hpp"

namespace l3col {

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

ListAssignment random_lists(int n, double restrict_prob, Rng& rng) {
  std::bernoulli_distribution coin(restrict_prob);
  std::uniform_int_distribution<unsigned> proper(1, 6);
  ListAssignment L(static_cast<std::size_t>(n), ColourSet::full());
  for (auto& s : L)
    if (coin(rng)) s = ColourSet::from_mask(proper(rng));
  return L;
}

ListAssignment random_small_lists(int n, Rng& rng) {
  std::uniform_int_distribution<unsigned> proper(1, 6);
  ListAssignment L(static_cast<std::size_t>(n));
  for (auto& s : L) s = ColourSet::from_mask(proper(rng));
  return L;
}

Graph shuffle_vertices(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

namespace {

using Mask = std::uint64_t;

struct ClassShape {
  std::vector<int> forbidden;
  int seed_cycle;  // 0 = none
};

ClassShape shape_of(GraphClass c) {
  switch (c) {
    case GraphClass::C5Free: return {{5}, 4};
    case GraphClass::C6Free: return {{6}, 5};
    case GraphClass::C4C7Free: return {{4, 7}, 5};
    case GraphClass::C4C8Free: return {{4, 8}, 6};
    case GraphClass::C4C9Free: return {{4, 9}, 7};
  }
  return {{}, 0};
}

// Small mutable graph on at most 64 vertices.
struct MaskGraph {
  int n;
  std::vector<Mask> adj;

  explicit MaskGraph(int n_) : n(n_), adj(static_cast<std::size_t>(n_), 0) {}

  bool has(int u, int v) const { return (adj[u] >> v) & 1U; }
  void add(int u, int v) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }

  // Induced path with exactly k vertices from u to v, u and v non-adjacent.
  bool induced_path(int u, int v, int k) const {
    const Mask vbit = Mask{1} << v;
    return extend(u, v, vbit, (Mask{1} << u) , k - 2);
  }

  // `blocked`: closed neighbourhoods of the path except its last vertex.
  bool extend(int last, int v, Mask vbit, Mask blocked, int remaining) const {
    if (remaining == 0) return (adj[last] & vbit) != 0;
    Mask cand = adj[last] & ~blocked & ~vbit;
    if (remaining > 1) cand &= ~adj[v];
    else cand &= adj[v];
    const Mask next_blocked = blocked | adj[last] | (Mask{1} << last);
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (extend(w, v, vbit, next_blocked, remaining - 1)) return true;
    }
    return false;
  }

  bool closes_k4(int u, int v) const {
    Mask common = adj[u] & adj[v];
    while (common) {
      const int a = std::countr_zero(common);
      common &= common - 1;
      if (adj[a] & common) return true;
    }
    return false;
  }

  bool admissible(int u, int v, const ClassShape& s, bool k4_free) const {
    if (u == v || has(u, v)) return false;
    if (k4_free && closes_k4(u, v)) return false;
    for (int k : s.forbidden)
      if (k <= n && induced_path(u, v, k)) return false;
    return true;
  }

  Mask reach2(int u) const {
    Mask r = adj[u] | (Mask{1} << u);
    Mask a = adj[u];
    while (a) {
      const int w = std::countr_zero(a);
      a &= a - 1;
      r |= adj[w];
    }
    return r;
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has(u, v)) edges.push_back({u, v});
    return Graph(n, edges);
  }
};

Mask all_bits(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Random admissible extra edges; keeps the diameter.
void densify(MaskGraph& g, const ClassShape& s, bool k4_free, int tries, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, g.n - 1);
  for (int i = 0; i < tries; ++i) {
    const int u = pick(rng), v = pick(rng);
    if (g.admissible(u, v, s, k4_free)) g.add(u, v);
  }
}

std::optional<MaskGraph> grow(int n, const ClassShape& s, bool k4_free, Rng& rng) {
  MaskGraph g(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(0.75);
  if (s.seed_cycle && n >= s.seed_cycle && coin(rng))
    for (int i = 0; i < s.seed_cycle; ++i) g.add(order[i], order[(i + 1) % s.seed_cycle]);

  const Mask full = all_bits(n);
  for (;;) {
    std::vector<std::pair<int, int>> far;
    for (int u = 0; u < n; ++u) {
      Mask out = full & ~g.reach2(u);
      out &= u == 63 ? 0 : ~((Mask{1} << (u + 1)) - 1);  // v > u
      while (out) {
        const int v = std::countr_zero(out);
        out &= out - 1;
        far.emplace_back(u, v);
      }
    }
    if (far.empty()) return g;
    const auto [u, v] = far[std::uniform_int_distribution<std::size_t>(0, far.size() - 1)(rng)];
    // Edges that bring u and v within distance 2.
    std::vector<std::pair<int, int>> fix{{u, v}};
    for (int w = 0; w < n; ++w) {
      if (g.has(v, w)) fix.emplace_back(u, w);
      if (g.has(u, w)) fix.emplace_back(v, w);
    }
    std::shuffle(fix.begin(), fix.end(), rng);
    bool added = false;
    for (auto [a, b] : fix)
      if (g.admissible(a, b, s, k4_free)) {
        g.add(a, b);
        added = true;
        break;
      }
    if (added) continue;
    // No single edge fixes the pair: move one endpoint closer to something.
    std::vector<std::pair<int, int>> any;
    for (int w = 0; w < n; ++w) {
      any.emplace_back(u, w);
      any.emplace_back(v, w);
    }
    std::shuffle(any.begin(), any.end(), rng);
    for (auto [a, b] : any)
      if (g.admissible(a, b, s, k4_free)) {
        g.add(a, b);
        added = true;
        break;
      }
    if (!added) return std::nullopt;
  }
}

MaskGraph dominated(int n, const ClassShape& s, bool k4_free, Rng& rng) {
  MaskGraph g(n);
  const int hub = std::uniform_int_distribution<int>(0, n - 1)(rng);
  for (int v = 0; v < n; ++v)
    if (v != hub) g.add(hub, v);
  densify(g, s, k4_free, 3 * n, rng);
  return g;
}

bool accept(const Graph& g, GraphClass c, bool k4_free) {
  ClassFacts facts(g);
  return facts.in_class(c) && (!k4_free || !facts.has_k4());
}

// Hub over a disjoint union of blocks. Every induced cycle through the hub
// has length at most 4, so the class is decided by the blocks alone.
Graph hub_graph(GraphClass c, int n, Rng& rng) {
  std::vector<Edge> edges;
  int next = 1;
  auto remaining = [&] { return n - next; };
  auto cycle = [&](int len) {
    for (int i = 0; i < len; ++i) edges.push_back({next + i, next + (i + 1) % len});
    next += len;
  };
  auto path = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) edges.push_back({next + i, next + i + 1});
    next += len;
  };
  std::vector<int> cycles;
  switch (c) {
    case GraphClass::C5Free: cycles = {4, 6, 8}; break;
    case GraphClass::C6Free: cycles = {5, 7, 4}; break;
    default: break;  // P3-free blocks only: a matching
  }
  std::uniform_int_distribution<int> kind(0, 3);
  while (remaining() > 0) {
    if (cycles.empty()) {
      path(std::min(remaining(), kind(rng) == 0 ? 1 : 2));
      continue;
    }
    const int k = kind(rng);
    const int len = k < 3 ? cycles[static_cast<std::size_t>(k)] : 3;
    if (len <= remaining()) {
      if (k < 3)
        cycle(len);
      else
        path(len);
    } else {
      path(remaining());
    }
  }
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

}  // namespace

Graph gen_class_graph(GraphClass c, int n, std::uint64_t seed, const GenOptions& opt) {
  if (n < 0) throw ContractError("negative vertex count");
  Rng rng(seed);
  if (n <= 1) return Graph(n, {});
  const ClassShape s = shape_of(c);
  if (n > 64) {
    Graph g = shuffle_vertices(hub_graph(c, n, rng), rng);
    if (!accept(g, c, opt.k4_free)) throw GenerationError("hub construction left the class");
    return g;
  }
  std::bernoulli_distribution extra(0.5);
  for (int attempt = 0; attempt < opt.retry_budget; ++attempt) {
    auto mg = grow(n, s, opt.k4_free, rng);
    if (!mg) continue;
    if (extra(rng)) densify(*mg, s, opt.k4_free, n, rng);
    Graph g = mg->to_graph();
    if (accept(g, c, opt.k4_free)) return g;
  }
  for (int attempt = 0; attempt < opt.retry_budget; ++attempt) {
    Graph g = dominated(n, s, opt.k4_free, rng).to_graph();
    if (accept(g, c, opt.k4_free)) return g;
  }
  throw GenerationError("no " + std::string(class_name(c)) + " graph on " + std::to_string(n) +
                        " vertices within the retry budget");
}

Instance gen_class_instance(GraphClass c, int n, std::uint64_t seed, const GenOptions& opt) {
  Graph g = gen_class_graph(c, n, seed, opt);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double q = opt.restrict_prob;
  if (q < 0) q = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  ListAssignment L = random_lists(n, q, rng);
  return {std::move(g), std::move(L)};
}

}  // namespace l3col
