#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace perfmat {

inline constexpr int kMaxVertices = 62;

using VertexSet = std::uint64_t;

/// Degrees in vertex order.
struct DegreeSequence {
  std::vector<int> degrees;

  std::size_t size() const { return degrees.size(); }
  bool operator==(const DegreeSequence&) const = default;
};

/// Simple undirected graph on at most 62 vertices, stored as one adjacency
/// bit row per vertex. Rows are symmetric with a zero diagonal.
class Graph {
 public:
  Graph() = default;

  /// Empty graph on n vertices.
  explicit Graph(int n);

  /// Builds from adjacency rows; rejects asymmetric rows, loops and bits
  /// beyond n.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int n() const { return n_; }
  VertexSet row(int v) const { return rows_[v]; }
  VertexSet all_vertices() const { return (VertexSet{1} << n_) - 1; }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  friend Graph from_edge_list(int, std::span<const std::pair<int, int>>);
  friend Graph parse_graph6(std::string_view);
  void set_edge(int u, int v) {
    rows_[u] |= VertexSet{1} << v;
    rows_[v] |= VertexSet{1} << u;
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
inline Graph from_edge_list(int n,
                            std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span(edges.begin(), edges.size()));
}

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" header, then m lines "u v"; '#' starts a comment.
Graph parse_edge_list(std::string_view text);

DegreeSequence degree_sequence(const Graph& g);

/// Components as vertex bitsets, ordered by lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff every component is K_{k,k} for some k >= 1. Isolated vertices
/// make this false; the empty graph (n = 0) is true.
bool is_union_of_complete_balanced_bipartite(const Graph& g);

/// Graph with edge {perm[u], perm[v]} for every edge {u, v} of g.
Graph relabel(const Graph& g, std::span<const int> perm);

/// g on vertices 0..g.n-1 followed by h shifted by g.n.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace perfmat
