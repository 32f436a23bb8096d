#include "l3col/lists.hpp"

#include <string>

#include "l3col/errors.hpp"

namespace l3col {

std::string ColourSet::str() const {
  if (empty()) return "-";
  std::string s;
  for (int c = 1; c <= 3; ++c)
    if (contains(c)) s += static_cast<char>('0' + c);
  return s;
}

ListAssignment full_lists(int n) { return ListAssignment(static_cast<std::size_t>(n), ColourSet::full()); }

int list_mass(const ListAssignment& L) {
  int m = 0;
  for (ColourSet s : L) m += s.size();
  return m;
}

bool is_proper(const Graph& g, const Colouring& c) {
  if (c.size() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (c[u] == 0) continue;
    for (Vertex w : g.neighbours(u))
      if (w > u && c[w] == c[u]) return false;
  }
  return true;
}

bool respects(const Colouring& c, const Graph& g, const ListAssignment& L) {
  if (c.size() != static_cast<std::size_t>(g.order()) || L.size() != c.size()) return false;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (!L[v].contains(c[v])) return false;
  return is_proper(g, c);
}

void for_each_promising(const Graph& g, const ListAssignment& L, std::span<const Vertex> N0,
                        const std::function<bool(const Precolouring&)>& visit, std::size_t bound) {
  if (N0.size() > bound)
    throw ConfigError("precolouring domain of size " + std::to_string(N0.size()) +
                      " exceeds the bound " + std::to_string(bound));
  for (std::size_t i = 0; i < N0.size(); ++i) {
    if (N0[i] < 0 || N0[i] >= g.order())
      throw ContractError("precolouring vertex " + std::to_string(N0[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (N0[i] == N0[j]) throw ContractError("precolouring domain repeats a vertex");
  }

  Precolouring p{{N0.begin(), N0.end()}, std::vector<int>(N0.size(), 0)};
  const std::size_t k = N0.size();
  // Plain backtracking; position i picks the smallest colour not clashing
  // with earlier adjacent positions.
  auto rec = [&](auto& self, std::size_t i) -> bool {
    if (i == k) return visit(p);
    for (int c = 1; c <= 3; ++c) {
      if (!L[N0[i]].contains(c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (p.colours[j] == c && g.adjacent(N0[i], N0[j])) ok = false;
      if (!ok) continue;
      p.colours[i] = c;
      if (!self(self, i + 1)) return false;
    }
    p.colours[i] = 0;
    return true;
  };
  rec(rec, 0);
}

std::vector<Precolouring> enumerate_promising(const Graph& g, const ListAssignment& L,
                                              std::span<const Vertex> N0, std::size_t bound) {
  std::vector<Precolouring> out;
  for_each_promising(
      g, L, N0,
      [&](const Precolouring& p) {
        out.push_back(p);
        return true;
      },
      bound);
  return out;
}

ListAssignment restrict_to_precolouring(const ListAssignment& L, const Precolouring& p) {
  ListAssignment out = L;
  for (std::size_t i = 0; i < p.domain.size(); ++i) out[p.domain[i]] = ColourSet::single(p.colours[i]);
  return out;
}

}  // namespace l3col
