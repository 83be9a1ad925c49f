#include "perfmat/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "perfmat/errors.hpp"

namespace perfmat {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

Count to_count(u128 v) {
  Count out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

Count to_count(i128 v) {
  if (v >= 0) return to_count(static_cast<u128>(v));
  return -to_count(static_cast<u128>(-v));
}

// Matches the lowest unmatched vertex first; the memo is keyed on the set
// of unmatched vertices.
class MatchingCounter {
 public:
  explicit MatchingCounter(const Graph& g) : g_(g) {}

  const Count& count(VertexSet unmatched) {
    if (auto it = memo_.find(unmatched); it != memo_.end()) return it->second;
    const int v = std::countr_zero(unmatched);
    const VertexSet rest = unmatched & (unmatched - 1);
    Count total = 0;
    for (VertexSet cand = g_.row(v) & rest; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      total += count(rest & ~(VertexSet{1} << u));
    }
    return memo_.emplace(unmatched, std::move(total)).first->second;
  }

  void seed_empty() { memo_.emplace(0, Count(1)); }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, Count> memo_;
};

// Breadth-first order from a minimum-degree vertex of each component. Keeps
// neighbours close in index, which keeps the unmatched-set memo small on
// sparse graphs.
std::vector<int> bandwidth_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.n());
  VertexSet unseen = g.all_vertices();
  while (unseen) {
    int root = std::countr_zero(unseen);
    for (VertexSet s = unseen; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      if (g.degree(v) < g.degree(root)) root = v;
    }
    std::size_t head = order.size();
    order.push_back(root);
    unseen &= ~(VertexSet{1} << root);
    while (head < order.size()) {
      const int v = order[head++];
      std::vector<int> fresh;
      for (VertexSet s = g.row(v) & unseen; s; s &= s - 1) {
        fresh.push_back(std::countr_zero(s));
      }
      std::ranges::stable_sort(fresh, {}, [&](int u) { return g.degree(u); });
      for (int u : fresh) {
        order.push_back(u);
        unseen &= ~(VertexSet{1} << u);
      }
    }
  }
  return order;
}

template <typename Acc>
Acc ryser(const Matrix01& m) {
  const int n = m.n();
  std::vector<std::uint64_t> columns(n);
  for (int j = 0; j < n; ++j) columns[j] = m.column_support(j);
  std::vector<int> sums(n, 0);
  int zero_rows = n;
  Acc total{0};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    gray ^= std::uint64_t{1} << j;
    const int delta = ((gray >> j) & 1U) ? 1 : -1;
    for (std::uint64_t rows = columns[j]; rows; rows &= rows - 1) {
      const int i = std::countr_zero(rows);
      if (sums[i] == 0) --zero_rows;
      sums[i] += delta;
      if (sums[i] == 0) ++zero_rows;
    }
    if (zero_rows != 0) continue;
    Acc term{1};
    for (int s : sums) term *= s;
    if ((n - std::popcount(gray)) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

Matrix01::Matrix01(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("matrix order " + std::to_string(n) +
                     " outside supported range 0.." +
                     std::to_string(kMaxVertices));
  }
}

Matrix01 Matrix01::from_rows(int n, std::span<const std::uint64_t> rows) {
  Matrix01 m(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw InputError("row count does not match matrix order");
  }
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~mask) throw InputError("matrix bit beyond order");
    m.rows_[i] = rows[i];
  }
  return m;
}

Matrix01 Matrix01::identity(int n) {
  Matrix01 m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Matrix01 Matrix01::all_ones(int n) {
  Matrix01 m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = (std::uint64_t{1} << n) - 1;
  return m;
}

Matrix01 Matrix01::adjacency(const Graph& g) {
  Matrix01 m(g.n());
  for (int i = 0; i < g.n(); ++i) m.rows_[i] = g.row(i);
  return m;
}

void Matrix01::set(int i, int j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::vector<int> Matrix01::row_sums() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = std::popcount(rows_[i]);
  return out;
}

std::uint64_t Matrix01::column_support(int j) const {
  std::uint64_t out = 0;
  for (int i = 0; i < n_; ++i) out |= ((rows_[i] >> j) & 1U) << i;
  return out;
}

Matrix01 Matrix01::permuted(std::span<const int> row_perm,
                            std::span<const int> col_perm) const {
  Matrix01 out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j)) out.set(row_perm[i], col_perm[j], true);
    }
  }
  return out;
}

Matrix01 Matrix01::direct_sum(const Matrix01& other) const {
  Matrix01 out(n_ + other.n_);
  for (int i = 0; i < n_; ++i) out.rows_[i] = rows_[i];
  for (int i = 0; i < other.n_; ++i) out.rows_[n_ + i] = other.rows_[i] << n_;
  return out;
}

bool Matrix01::operator==(const Matrix01& other) const {
  return n_ == other.n_ && rows_ == other.rows_;
}

Count count_perfect_matchings(const Graph& g) {
  if (g.n() % 2 != 0) return 0;
  const std::vector<int> order = bandwidth_order(g);
  std::vector<int> position(g.n());
  for (int i = 0; i < g.n(); ++i) position[order[i]] = i;
  const Graph relabeled = relabel(g, position);
  MatchingCounter counter(relabeled);
  counter.seed_empty();
  return counter.count(g.all_vertices());
}

Count permanent(const Matrix01& m) {
  const int n = m.n();
  if (n == 0) return 1;
  const std::vector<int> sums = m.row_sums();
  if (std::ranges::find(sums, 0) != sums.end()) return 0;
  // |sum| <= 2^n * prod(row sums) bounds every partial sum and product.
  double bound_bits = n;
  for (int s : sums) bound_bits += std::log2(static_cast<double>(s));
  if (bound_bits < 125.0) return to_count(ryser<i128>(m));
  return ryser<Count>(m);
}

namespace detail {
Count permanent_ryser_bigint(const Matrix01& m) {
  if (m.n() == 0) return 1;
  return ryser<Count>(m);
}
}  // namespace detail

Count permanent_adjacency(const Graph& g) {
  return permanent(Matrix01::adjacency(g));
}

Count naive_permanent(const Matrix01& m, int max_order) {
  if (m.n() > max_order) {
    throw GuardError("naive permanent limited to order " +
                     std::to_string(max_order) + ", got " +
                     std::to_string(m.n()));
  }
  std::vector<int> sigma(m.n());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t total = 0;
  do {
    bool all = true;
    for (int i = 0; i < m.n() && all; ++i) all = m.at(i, sigma[i]);
    total += all ? 1 : 0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return Count(total);
}

CycleCoverTally weighted_cycle_cover_count(const Graph& g, CycleMode mode,
                                           int max_order) {
  if (g.n() > max_order) {
    throw GuardError("cycle-cover enumeration limited to " +
                     std::to_string(max_order) + " vertices, got " +
                     std::to_string(g.n()));
  }
  if (g.n() > kCycleCoverHardLimit) {
    throw GuardError("cycle-cover tables need n <= " +
                     std::to_string(kCycleCoverHardLimit));
  }
  const int n = g.n();
  const std::size_t subsets = std::size_t{1} << n;

  // walks[S * n + v]: simple paths start -> ... -> v with vertex set exactly
  // S, where start = min(S) and every other vertex exceeds it.
  std::vector<std::uint64_t> walks(subsets * n, 0);
  for (int v = 0; v < n; ++v) walks[(std::size_t{1} << v) * n + v] = 1;
  // weight[S]: sum of 2^s over single cycles with vertex set S, i.e. 1 for a
  // doubled edge and 2 per undirected cycle (= directed closures) otherwise.
  std::vector<std::uint64_t> weight(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s) {
    const int start = std::countr_zero(s);
    const int size = std::popcount(s);
    for (VertexSet ends = s; ends; ends &= ends - 1) {
      const int v = std::countr_zero(ends);
      const std::uint64_t w = walks[s * n + v];
      if (w == 0) continue;
      if (size >= 2 && g.has_edge(v, start)) weight[s] += w;
      const VertexSet next = g.row(v) & ~s & ~((VertexSet{1} << (start + 1)) - 1);
      for (VertexSet t = next; t; t &= t - 1) {
        const int u = std::countr_zero(t);
        walks[(s | (std::size_t{1} << u)) * n + u] += w;
      }
    }
    if (mode == CycleMode::even_only && size % 2 != 0) weight[s] = 0;
  }

  // tally[U]: covers of U, peeling the cycle through min(U).
  std::vector<u128> tally(subsets, 0);
  tally[0] = 1;
  for (std::size_t u = 1; u < subsets; ++u) {
    const std::size_t low = u & (~u + 1);
    const std::size_t rest = u ^ low;
    u128 total = 0;
    // Enumerate sub-subsets of rest; S = low | sub.
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t cyc = low | sub;
      if (weight[cyc] != 0 && tally[rest ^ sub] != 0) {
        total += static_cast<u128>(weight[cyc]) * tally[rest ^ sub];
      }
      if (sub == 0) break;
    }
    tally[u] = total;
  }
  return {mode, to_count(tally[subsets - 1])};
}

bool is_block_all_ones_up_to_permutation(const Matrix01& m) {
  std::map<std::uint64_t, std::uint64_t> rows_by_support;
  for (int i = 0; i < m.n(); ++i) {
    if (m.row(i) == 0) return false;
    rows_by_support[m.row(i)] |= std::uint64_t{1} << i;
  }
  std::uint64_t seen_columns = 0;
  for (auto [support, rows] : rows_by_support) {
    if (std::popcount(support) != std::popcount(rows)) return false;
    if (support & seen_columns) return false;
    seen_columns |= support;
    for (std::uint64_t s = support; s; s &= s - 1) {
      if (m.column_support(std::countr_zero(s)) != rows) return false;
    }
  }
  return true;
}

std::string to_string(CycleMode mode) {
  return mode == CycleMode::even_only ? "even_only" : "all_cycles";
}

}  // namespace perfmat
