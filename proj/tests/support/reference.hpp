#pragma once

// Deliberately naive reference implementations, independent of the library
// algorithms, used as oracles by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <functional>
#include <cstdint>
#include <optional>
#include <vector>

#include "l3col/graph.hpp"
#include "l3col/hardness.hpp"
#include "l3col/lists.hpp"

namespace ref {

using l3col::Graph;
using l3col::ListAssignment;
using l3col::Vertex;

inline std::vector<std::vector<char>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Number of proper L-colourings by plain odometer enumeration over 3^n.
inline std::uint64_t count(const Graph& g, const ListAssignment& L) {
  const int n = g.order();
  const auto edges = g.edges();
  std::vector<int> c(n, 1);
  std::uint64_t total = 0;
  for (;;) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = L[v].contains(c[v]);
    for (const auto& e : edges) {
      if (!ok) break;
      ok = c[e.u] != c[e.v];
    }
    total += ok;
    int i = 0;
    while (i < n && c[i] == 3) c[i++] = 1;
    if (i == n) break;
    ++c[i];
  }
  return total;
}

inline bool colourable(const Graph& g, const ListAssignment& L) { return count(g, L) > 0; }

/// Floyd-Warshall diameter; nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return std::nullopt;
      best = std::max(best, d[i][j]);
    }
  return best;
}

/// True iff the vertex set induces a cycle (connected, 2-regular, size >= 3).
inline bool induces_cycle(const std::vector<std::vector<char>>& a, const std::vector<int>& s) {
  if (s.size() < 3) return false;
  for (int u : s) {
    int deg = 0;
    for (int v : s) deg += a[u][v];
    if (deg != 2) return false;
  }
  std::vector<char> seen(s.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!seen[j] && a[s[i]][s[j]]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(static_cast<int>(j));
      }
  }
  return reached == s.size();
}

/// Number of induced k-cycles (as vertex sets), by subset enumeration.
inline std::size_t induced_cycles(const Graph& g, int k) {
  const int n = g.order();
  if (k > n) return 0;
  const auto a = matrix(g);
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::size_t total = 0;
  for (;;) {
    total += induces_cycle(a, pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

/// Some 4-clique, by quadruple enumeration.
inline bool has_k4(const Graph& g) {
  const int n = g.order();
  const auto a = matrix(g);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (a[p][q])
        for (int r = q + 1; r < n; ++r)
          if (a[p][r] && a[q][r])
            for (int s = r + 1; s < n; ++s)
              if (a[p][s] && a[q][s] && a[r][s]) return true;
  return false;
}

/// NAE satisfiability by recursion over variables.
inline bool nae(const l3col::NaeFormula& f) {
  std::vector<int> val(f.variables, 0);
  auto ok = [&] {
    for (const auto& c : f.clauses) {
      int t = 0;
      for (const auto& l : c) t += (val[l.var] == 1) == l.positive;
      if (t == 0 || t == 3) return false;
    }
    return true;
  };
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.variables); ++m) {
    for (int i = 0; i < f.variables; ++i) val[i] = (m >> i) & 1;
    if (ok()) return true;
  }
  return false;
}

/// Forward-checking DSATUR-style 3-colouring search with full lists, for
/// graphs too large for count().
inline bool three_colourable(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, 0);
  std::vector<std::array<int, 4>> blocked(n, {0, 0, 0, 0});
  auto options = [&](int v) {
    int k = 0;
    for (int c = 1; c <= 3; ++c) k += blocked[v][c] == 0;
    return k;
  };
  std::function<bool(int, int)> go = [&](int left, int used) -> bool {
    if (left == 0) return true;
    int best = -1, best_opts = 4;
    for (int v = 0; v < n; ++v)
      if (!colour[v]) {
        const int o = options(v);
        if (o < best_opts) best = v, best_opts = o;
      }
    if (best_opts == 0) return false;
    // colours above used + 1 are symmetric to used + 1
    for (int c = 1; c <= std::min(3, used + 1); ++c) {
      if (blocked[best][c]) continue;
      colour[best] = c;
      for (Vertex w : g.neighbours(best)) ++blocked[w][c];
      if (go(left - 1, std::max(used, c))) return true;
      for (Vertex w : g.neighbours(best)) --blocked[w][c];
      colour[best] = 0;
    }
    return false;
  };
  return go(n, 0);
}

}  // namespace ref
