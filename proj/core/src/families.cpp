#include "l3col/families.hpp"

#include <vector>

namespace l3col::families {

Graph empty(int n) { return Graph(n, {}); }

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, e);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part.push_back(static_cast<int>(p));
  const int n = static_cast<int>(part.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] != part[j]) e.push_back({i, j});
  return Graph(n, e);
}

Graph wheel(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.push_back({i, (i + 1) % k});
    e.push_back({i, k});
  }
  return Graph(k + 1, e);
}

Graph book(int pages) {
  std::vector<Edge> e{{0, 1}};
  for (int i = 0; i < pages; ++i) {
    e.push_back({0, 2 + i});
    e.push_back({1, 2 + i});
  }
  return Graph(pages + 2, e);
}

Graph diamond() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Graph(4, e);
}

Graph bull() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}};
  return Graph(5, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, 5 + i});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

Graph hoffman_singleton() {
  // Pentagon P_h vertex j is 10h + j, pentagram Q_i vertex j is 10i + 5 + j.
  // P_h[j] ~ P_h[j±1], Q_i[j] ~ Q_i[j±2], P_h[j] ~ Q_i[h*i + j].
  std::vector<Edge> e;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      e.push_back({10 * h + j, 10 * h + (j + 1) % 5});
      e.push_back({10 * h + 5 + j, 10 * h + 5 + (j + 2) % 5});
    }
  }
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) e.push_back({10 * h + j, 10 * i + 5 + (h * i + j) % 5});
  return Graph(50, e);
}

}  // namespace l3col::families
