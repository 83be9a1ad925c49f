#include "perfmat/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "perfmat/errors.hpp"

namespace perfmat {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) +
                     " outside supported range 0.." +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  Graph g(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw InputError("row count does not match vertex count");
  }
  const VertexSet mask = g.all_vertices();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~mask) throw InputError("adjacency bit beyond vertex count");
    if ((rows[v] >> v) & 1U) throw InputError("self-loop in adjacency rows");
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != g.has_edge(v, u)) {
        throw InputError("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ &&
         std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    g.set_edge(u, v);
  }
  return g;
}

// graph6 short form: one header byte n + 63, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte.
Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) {
      throw InputError("graph6 byte " + std::to_string(byte) +
                       " outside [63,126]");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxVertices) {
    throw InputError("bad graph6 header: long form (n > 62) is unsupported");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - 1 != expected) {
    throw InputError("graph6 payload length " +
                     std::to_string(text.size() - 1) + " does not match " +
                     std::to_string(expected) + " for n=" + std::to_string(n));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.set_edge(u, v);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n + 63);
  std::vector<int> payload((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.has_edge(u, v)) payload[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t i = 0; i < payload.size(); ++i) {
    out[1 + i] = static_cast<char>(payload[i] + 63);
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long> numbers;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InputError("edge list: not an integer: '" + tok + "'");
      }
      numbers.push_back(value);
    }
  }
  if (numbers.size() < 2) throw InputError("edge list: missing 'n m' header");
  const long n = numbers[0];
  const long m = numbers[1];
  if (n < 0 || n > kMaxVertices) {
    throw InputError("edge list: vertex count " + std::to_string(n) +
                     " outside 0.." + std::to_string(kMaxVertices));
  }
  if (m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw InputError("edge list: expected " + std::to_string(m) +
                     " edges after header");
  }
  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < m; ++i) {
    const long u = numbers[2 + 2 * i];
    const long v = numbers[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge list: vertex index out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return from_edge_list(static_cast<int>(n), edges);
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence d;
  d.degrees.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) d.degrees.push_back(g.degree(v));
  return d;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.all_vertices();
  while (unseen) {
    VertexSet comp = unseen & (~unseen + 1);
    VertexSet frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexSet fresh = g.row(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_union_of_complete_balanced_bipartite(const Graph& g) {
  for (VertexSet comp : connected_components(g)) {
    const int size = std::popcount(comp);
    if (size == 1 || size % 2 != 0) return false;
    // 2-colour from the lowest vertex; a K_{k,k} component has its side
    // X = N(y) for any y and Y = N(x) for any x.
    const int root = std::countr_zero(comp);
    const VertexSet other_side = g.row(root);
    const VertexSet root_side = comp & ~other_side;
    if (std::popcount(root_side) != size / 2) return false;
    for (VertexSet s = comp; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const VertexSet expected = (root_side >> v) & 1U ? other_side : root_side;
      if (g.row(v) != expected) return false;
    }
  }
  return true;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.n())) {
    throw InputError("relabel: permutation size does not match vertex count");
  }
  std::vector<bool> seen(g.n(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.n() || seen[p]) {
      throw InputError("relabel: not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::pair<int, int>> mapped;
  for (auto [u, v] : g.edges()) mapped.emplace_back(perm[u], perm[v]);
  return from_edge_list(g.n(), mapped);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.n(), v + g.n());
  return from_edge_list(g.n() + h.n(), edges);
}

}  // namespace perfmat
