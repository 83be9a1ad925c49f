#include "perfmat/families.hpp"

#include <vector>

namespace perfmat::families {

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return from_edge_list(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return from_edge_list(n, e);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edge_list(n, e);
}

// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  }
  return from_edge_list(a + b, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return from_edge_list(10, e);
}

}  // namespace perfmat::families
