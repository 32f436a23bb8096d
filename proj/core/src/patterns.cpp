#include "l3col/patterns.hpp"

#include <stdexcept>
#include <string>

#include "l3col/errors.hpp"

namespace l3col {

using bits::Word;

namespace {

void require_matrix(const Graph& g) {
  if (!g.has_matrix())
    throw ConfigError("pattern search needs an adjacency matrix (n <= " +
                      std::to_string(Graph::kMatrixLimit) + ")");
}

Word bit_of(std::size_t word, Vertex v) {
  return static_cast<std::size_t>(v) / 64 == word ? Word{1} << (v % 64) : Word{0};
}

// Depth-first extension of induced paths into induced cycles. The start
// vertex is the least vertex of the cycle; every later vertex must avoid the
// closed neighbourhoods of all path vertices except the current end, and the
// closing vertex must exceed path[1] so each cycle is produced once.
template <class Visit>
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k, Visit& visit)
      : g_(g), k_(k), words_(g.words()), path_(static_cast<std::size_t>(k)),
        avoid_all_(static_cast<std::size_t>(k) * words_),
        avoid_inner_(static_cast<std::size_t>(k) * words_), visit_(visit) {}

  void run() {
    for (Vertex s = 0; s < g_.order() && !stopped_; ++s) {
      path_[0] = s;
      Word* all = level(avoid_all_, 1);
      Word* inner = level(avoid_inner_, 1);
      auto rs = g_.row(s);
      for (std::size_t i = 0; i < words_; ++i) {
        all[i] = rs[i] | bit_of(i, s);
        inner[i] = 0;
      }
      for (Vertex p1 : g_.neighbours(s)) {
        if (p1 <= s) continue;
        path_[1] = p1;
        extend(1);
        if (stopped_) return;
      }
    }
  }

 private:
  Word* level(std::vector<Word>& v, int j) { return v.data() + static_cast<std::size_t>(j) * words_; }

  void extend(int j) {
    const auto last = g_.row(path_[j]);
    const Vertex s = path_[0];
    if (j + 1 == k_ - 1) {
      const auto first = g_.row(s);
      const Word* inner = level(avoid_inner_, j);
      const Vertex p1 = path_[1];
      bits::for_each(
          words_,
          [&](std::size_t i) { return last[i] & first[i] & ~inner[i] & bits::above_mask(i, p1); },
          [&](int w) {
            if (stopped_) return;
            path_[k_ - 1] = w;
            if (!visit_(std::span<const Vertex>(path_))) stopped_ = true;
          });
      return;
    }
    const Word* all = level(avoid_all_, j);
    const Word* inner = level(avoid_inner_, j);
    Word* next_all = level(avoid_all_, j + 1);
    Word* next_inner = level(avoid_inner_, j + 1);
    for (std::size_t i = 0; i < words_; ++i) {
      const Word closed = last[i] | bit_of(i, path_[j]);
      next_all[i] = all[i] | closed;
      next_inner[i] = inner[i] | closed;
    }
    bits::for_each(
        words_, [&](std::size_t i) { return last[i] & ~all[i] & bits::above_mask(i, s); },
        [&](int w) {
          if (stopped_) return;
          path_[j + 1] = w;
          extend(j + 1);
        });
  }

  const Graph& g_;
  int k_;
  std::size_t words_;
  std::vector<Vertex> path_;
  std::vector<Word> avoid_all_;    // level j: union of N[path[0..j-1]]
  std::vector<Word> avoid_inner_;  // level j: union of N[path[1..j-1]]
  Visit& visit_;
  bool stopped_ = false;
};

void check_length(int k, const CycleSearchLimits& limits) {
  if (k < 3 || k > limits.max_length)
    throw ContractError("induced cycle length " + std::to_string(k) + " outside 3.." +
                        std::to_string(limits.max_length));
}

}  // namespace

std::optional<Quadruple> find_k4(const Graph& g) {
  require_matrix(g);
  const std::size_t words = g.words();
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbours(a)) {
      if (b <= a) continue;
      auto ra = g.row(a);
      auto rb = g.row(b);
      for (Vertex c : g.neighbours(a)) {
        if (c <= b || !g.adjacent(b, c)) continue;
        auto rc = g.row(c);
        const int d = bits::first(words, [&](std::size_t i) {
          return ra[i] & rb[i] & rc[i] & bits::above_mask(i, c);
        });
        if (d >= 0) return Quadruple{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triangle> find_triangle(const Graph& g) {
  require_matrix(g);
  const std::size_t words = g.words();
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    for (Vertex b : g.neighbours(a)) {
      if (b <= a) continue;
      auto rb = g.row(b);
      const int c =
          bits::first(words, [&](std::size_t i) { return ra[i] & rb[i] & bits::above_mask(i, b); });
      if (c >= 0) return Triangle{a, b, c};
    }
  }
  return std::nullopt;
}

void for_each_induced_cycle(const Graph& g, int k,
                            const std::function<bool(std::span<const Vertex>)>& visit,
                            const CycleSearchLimits& limits) {
  require_matrix(g);
  check_length(k, limits);
  if (g.order() < k) return;
  auto v = [&](std::span<const Vertex> c) { return visit(c); };
  CycleSearch<decltype(v)> search(g, k, v);
  search.run();
}

std::optional<InducedCycle> find_induced_cycle(const Graph& g, int k,
                                               const CycleSearchLimits& limits) {
  std::optional<InducedCycle> found;
  for_each_induced_cycle(
      g, k,
      [&](std::span<const Vertex> c) {
        found = InducedCycle{{c.begin(), c.end()}};
        return false;
      },
      limits);
  return found;
}

std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, int k,
                                                   const CycleSearchLimits& limits) {
  std::vector<InducedCycle> out;
  for_each_induced_cycle(
      g, k,
      [&](std::span<const Vertex> c) {
        if (out.size() >= limits.max_cycles) throw EnumerationOverflow(k, limits.max_cycles);
        out.push_back(InducedCycle{{c.begin(), c.end()}});
        return true;
      },
      limits);
  return out;
}

bool has_induced_path(const Graph& g, Vertex u, Vertex v, int k) {
  require_matrix(g);
  if (k < 3 || u == v || g.adjacent(u, v)) return false;
  const std::size_t words = g.words();
  const auto rv = g.row(v);
  std::vector<Word> avoid(static_cast<std::size_t>(k) * words, 0);
  std::vector<Vertex> path(static_cast<std::size_t>(k));
  path[0] = u;

  // avoid level j = union of N[path[0..j-1]].
  auto rec = [&](auto& self, int j) -> bool {
    const int pos = j + 1;
    const auto last = g.row(path[j]);
    const Word* cur = avoid.data() + static_cast<std::size_t>(j) * words;
    auto candidate = [&](std::size_t i) {
      Word c = last[i] & ~cur[i] & ~bit_of(i, v);
      if (pos < k - 2) return c & ~rv[i];
      return c & rv[i];
    };
    if (pos == k - 2) return bits::any(words, candidate);
    Word* next = avoid.data() + static_cast<std::size_t>(j + 1) * words;
    for (std::size_t i = 0; i < words; ++i) next[i] = cur[i] | last[i] | bit_of(i, path[j]);
    bool found = false;
    bits::for_each(words, candidate, [&](int w) {
      if (found) return;
      path[pos] = w;
      found = self(self, pos);
    });
    return found;
  };
  return rec(rec, 0);
}

std::variant<Triangle, InducedCycle> find_triangle_or_induced_c5(const Graph& g) {
  if (bipartition(g)) throw ContractError("find_triangle_or_induced_c5: graph is bipartite");
  if (!diameter_at_most(g, 2))
    throw ContractError("find_triangle_or_induced_c5: diameter exceeds 2");
  if (auto t = find_triangle(g)) return *t;
  if (auto c = find_induced_cycle(g, 5)) return *c;
  throw std::logic_error("non-bipartite diameter-2 graph without C3 or induced C5");
}

std::vector<DiamondSite> diamond_sites_at(const Graph& g, Vertex x) {
  require_matrix(g);
  std::vector<DiamondSite> out;
  const std::size_t words = g.words();
  auto rx = g.row(x);
  for (Vertex y = 0; y < g.order(); ++y) {
    if (y == x || g.adjacent(x, y)) continue;
    auto ry = g.row(y);
    bits::for_each(
        words, [&](std::size_t i) { return rx[i] & ry[i]; },
        [&](int u) {
          auto ru = g.row(u);
          bits::for_each(
              words, [&](std::size_t i) { return rx[i] & ry[i] & ru[i] & bits::above_mask(i, u); },
              [&](int v) { out.push_back({u, v, x, y}); });
        });
  }
  return out;
}

std::vector<BullSite> bull_sites_at(const Graph& g, Vertex w) {
  require_matrix(g);
  std::vector<BullSite> out;
  const std::size_t words = g.words();
  auto rw = g.row(w);
  for (Vertex x : g.neighbours(w)) {
    auto rx = g.row(x);
    for (Vertex y : g.neighbours(w)) {
      if (y <= x || !g.adjacent(x, y)) continue;
      auto ry = g.row(y);
      auto pendant_x = [&](std::size_t i) {
        return rx[i] & ~rw[i] & ~ry[i] & ~bit_of(i, w) & ~bit_of(i, y);
      };
      auto pendant_y = [&](std::size_t i) {
        return ry[i] & ~rw[i] & ~rx[i] & ~bit_of(i, w) & ~bit_of(i, x);
      };
      bits::for_each(words, pendant_x, [&](int u) {
        bits::for_each(
            words, pendant_y, [&](int v) {
              if (!g.adjacent(u, v)) out.push_back({u, v, w, x, y});
            });
      });
    }
  }
  return out;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const auto k = cycle.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (cycle[i] < 0 || cycle[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool is_diamond_site(const Graph& g, const DiamondSite& s) {
  return g.adjacent(s.u, s.v) && g.adjacent(s.u, s.x) && g.adjacent(s.u, s.y) &&
         g.adjacent(s.v, s.x) && g.adjacent(s.v, s.y) && s.x != s.y && !g.adjacent(s.x, s.y);
}

bool is_bull_site(const Graph& g, const BullSite& s) {
  const std::array<Vertex, 5> vs{s.u, s.v, s.w, s.x, s.y};
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) return false;
  const bool edges = g.adjacent(s.x, s.y) && g.adjacent(s.x, s.w) && g.adjacent(s.y, s.w) &&
                     g.adjacent(s.u, s.x) && g.adjacent(s.v, s.y);
  const bool non_edges = !g.adjacent(s.u, s.v) && !g.adjacent(s.u, s.w) &&
                         !g.adjacent(s.v, s.w) && !g.adjacent(s.u, s.y) &&
                         !g.adjacent(s.v, s.x);
  return edges && non_edges;
}

}  // namespace l3col
