#include "l3col/twosat.hpp"

#include <algorithm>
#include <string>

#include "l3col/errors.hpp"

namespace l3col {

namespace {

// SCC labels of a CSR digraph, reverse topological order. Single-array
// variant of Tarjan (Pearce): rindex holds the DFS index while a literal is
// open and a component label counted down from lits - 1 once it is done, so
// finished literals never compare lower than open ones.
std::vector<int> scc_labels(int lits, const std::vector<int>& start, const std::vector<int>& adj) {
  struct Frame {
    int v, cursor;
    bool root;
  };
  std::vector<int> rindex(static_cast<std::size_t>(lits), 0);
  std::vector<int> stack;
  std::vector<Frame> call;
  int index = 1, label = lits - 1;
  for (int r = 0; r < lits; ++r) {
    if (rindex[r] != 0) continue;
    rindex[r] = index++;
    call.push_back({r, start[r], true});
    while (!call.empty()) {
      Frame& f = call.back();
      const int v = f.v;
      if (f.cursor < start[v + 1]) {
        const int w = adj[f.cursor++];
        if (rindex[w] == 0) {
          rindex[w] = index++;
          call.push_back({w, start[w], true});
        } else if (rindex[w] < rindex[v]) {
          rindex[v] = rindex[w];
          f.root = false;
        }
        continue;
      }
      if (f.root) {
        --index;
        while (!stack.empty() && rindex[v] <= rindex[stack.back()]) {
          rindex[stack.back()] = label;
          stack.pop_back();
          --index;
        }
        rindex[v] = label--;
      } else {
        stack.push_back(v);
      }
      call.pop_back();
      if (!call.empty()) {
        Frame& p = call.back();
        if (rindex[v] < rindex[p.v]) {
          rindex[p.v] = rindex[v];
          p.root = false;
        }
      }
    }
  }
  for (int& x : rindex) x = lits - 1 - x;
  return rindex;
}

}  // namespace

ImplicationGraph::ImplicationGraph(int variables) : vars_(variables) {
  if (variables < 0) throw ContractError("negative variable count");
}

void ImplicationGraph::add_clause(int a, int b) {
  from_.push_back(negate(a));
  to_.push_back(b);
  if (a != b) {
    from_.push_back(negate(b));
    to_.push_back(a);
  }
}

std::vector<std::pair<int, int>> ImplicationGraph::implications() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(from_.size());
  for (std::size_t i = 0; i < from_.size(); ++i) out.emplace_back(from_[i], to_[i]);
  return out;
}

std::vector<int> ImplicationGraph::components() const {
  const int lits = 2 * vars_;
  std::vector<int> start(static_cast<std::size_t>(lits) + 1, 0);
  for (int f : from_) ++start[f + 1];
  for (int i = 0; i < lits; ++i) start[i + 1] += start[i];
  std::vector<int> adj(from_.size());
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < from_.size(); ++i) adj[fill[from_[i]]++] = to_[i];
  }
  return scc_labels(lits, start, adj);
}

std::optional<std::vector<bool>> ImplicationGraph::satisfy() const {
  const auto comp = components();
  std::vector<bool> value(static_cast<std::size_t>(vars_));
  for (int x = 0; x < vars_; ++x) {
    if (comp[pos(x)] == comp[neg(x)]) return std::nullopt;
    // The literal whose component is closer to the sinks is set true.
    value[x] = comp[pos(x)] < comp[neg(x)];
  }
  return value;
}

std::optional<Colouring> solve_2list(const Graph& g, const ListAssignment& L) {
  const int n = g.order();
  if (L.size() != static_cast<std::size_t>(n)) throw ContractError("list assignment size mismatch");
  for (Vertex v = 0; v < n; ++v) {
    const int s = L[v].size();
    if (s == 0 || s == 3)
      throw ContractError("2-list solver called with list of size " + std::to_string(s) +
                          " at vertex " + std::to_string(v));
  }
  // x_v true: v takes the first colour of L(v); false: the second one.
  // Implications are written straight into CSR form, one counting pass and
  // one filling pass over the same loop.
  using IG = ImplicationGraph;
  auto takes = [&](Vertex v, int c) { return c == L[v].first() ? IG::pos(v) : IG::neg(v); };
  const int lits = 2 * n;
  std::vector<int> start(static_cast<std::size_t>(lits) + 1, 0);
  std::vector<int> adj;
  auto each_implication = [&](auto&& emit) {
    for (Vertex v = 0; v < n; ++v)
      if (L[v].size() == 1) emit(IG::neg(v), IG::pos(v));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : g.neighbours(u)) {
        if (v < u) continue;
        const ColourSet common = L[u] & L[v];
        for (int c = 1; c <= 3; ++c) {
          if (!common.contains(c)) continue;
          // not both u and v take c
          emit(takes(u, c), IG::negate(takes(v, c)));
          emit(takes(v, c), IG::negate(takes(u, c)));
        }
      }
    }
  };
  each_implication([&](int from, int) { ++start[from + 1]; });
  for (int i = 0; i < lits; ++i) start[i + 1] += start[i];
  adj.resize(static_cast<std::size_t>(start[lits]));
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    each_implication([&](int from, int to) { adj[fill[from]++] = to; });
  }
  const std::vector<int> comp = scc_labels(lits, start, adj);
  for (Vertex v = 0; v < n; ++v)
    if (comp[IG::pos(v)] == comp[IG::neg(v)]) return std::nullopt;
  Colouring c(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) c[v] = comp[IG::pos(v)] < comp[IG::neg(v)] ? L[v].first() : L[v].last();
  return c;
}

}  // namespace l3col
