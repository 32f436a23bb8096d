#include "l3col/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "l3col/errors.hpp"

namespace l3col {

namespace {

class Backtrack {
 public:
  Backtrack(const Graph& g, const ListAssignment& L) : g_(g), L_(L), colour_(g.order(), 0) {
    order_.resize(static_cast<std::size_t>(g.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  // Visits every complete colouring; stops when visit returns false.
  template <class Visit>
  bool run(std::size_t i, Visit& visit) {
    if (i == order_.size()) return visit(colour_);
    const Vertex v = order_[i];
    for (int c = 1; c <= 3; ++c) {
      if (!L_[v].contains(c)) continue;
      bool clash = false;
      for (Vertex w : g_.neighbours(v))
        if (colour_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour_[v] = c;
      if (!run(i + 1, visit)) return false;
    }
    colour_[v] = 0;
    return true;
  }

 private:
  const Graph& g_;
  const ListAssignment& L_;
  std::vector<int> colour_;
  std::vector<Vertex> order_;
};

void check_lists(const Graph& g, const ListAssignment& L) {
  if (L.size() != static_cast<std::size_t>(g.order()))
    throw ContractError("list assignment size mismatch");
}

}  // namespace

std::optional<Colouring> oracle_list_colour(const Graph& g, const ListAssignment& L,
                                            int max_vertices) {
  check_lists(g, L);
  if (g.order() > max_vertices)
    throw BudgetError("oracle limited to " + std::to_string(max_vertices) + " vertices");
  std::optional<Colouring> found;
  auto visit = [&](const std::vector<int>& c) {
    found = c;
    return false;
  };
  Backtrack b(g, L);
  b.run(0, visit);
  return found;
}

std::uint64_t count_colourings(const Graph& g, const ListAssignment& L) {
  check_lists(g, L);
  if (g.order() > kCountMaxVertices)
    throw BudgetError("colouring count limited to " + std::to_string(kCountMaxVertices) +
                      " vertices");
  std::uint64_t count = 0;
  auto visit = [&](const std::vector<int>&) {
    ++count;
    return true;
  };
  Backtrack b(g, L);
  b.run(0, visit);
  return count;
}

}  // namespace l3col
