#pragma once

// Standard small graphs used by tests, examples and the benchmarks.

#include <span>

#include "l3col/graph.hpp"

namespace l3col::families {

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> part_sizes);
/// C_k plus a hub (vertex k) adjacent to every rim vertex.
Graph wheel(int k);
/// Edge 0-1 plus `pages` vertices adjacent to both.
Graph book(int pages);
/// K4 minus the edge 2-3 (so 0-1 is the shared edge).
Graph diamond();
/// Triangle 0-1-2 with pendants 3 on 0 and 4 on 1; 2 is the apex.
Graph bull();
Graph petersen();
/// The 50-vertex Moore graph of degree 7 and diameter 2 (pentagons and pentagrams).
Graph hoffman_singleton();

}  // namespace l3col::families
