#include "perfmat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "perfmat/errors.hpp"

namespace perfmat {

namespace {

bool draw_edge(std::mt19937_64& rng, double p) {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return static_cast<double>(rng() >> 11) * kScale < p;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
}

class RealizationSearch {
 public:
  RealizationSearch(const DegreeSequence& d, const GraphSink& sink)
      : n_(static_cast<int>(d.size())), remaining_(d.degrees), sink_(sink),
        rows_(n_, 0) {}

  void run() {
    if (erdos_gallai_realizable(DegreeSequence{remaining_})) visit(0);
  }

 private:
  // Vertex i picks all of its neighbours among j > i at once.
  void visit(int i) {
    if (i == n_) {
      sink_(Graph::from_rows(n_, rows_));
      return;
    }
    std::vector<int> candidates;
    for (int j = i + 1; j < n_; ++j) {
      if (remaining_[j] > 0) candidates.push_back(j);
    }
    const int need = remaining_[i];
    if (need > static_cast<int>(candidates.size())) return;
    choose(i, candidates, 0, need);
  }

  void choose(int i, const std::vector<int>& candidates, std::size_t from,
              int need) {
    if (need == 0) {
      const int saved = remaining_[i];
      remaining_[i] = 0;
      if (residual_graphic(i + 1)) visit(i + 1);
      remaining_[i] = saved;
      return;
    }
    for (std::size_t k = from; k + need <= candidates.size(); ++k) {
      const int j = candidates[k];
      rows_[i] |= VertexSet{1} << j;
      rows_[j] |= VertexSet{1} << i;
      --remaining_[j];
      choose(i, candidates, k + 1, need - 1);
      ++remaining_[j];
      rows_[i] &= ~(VertexSet{1} << j);
      rows_[j] &= ~(VertexSet{1} << i);
    }
  }

  bool residual_graphic(int from) const {
    DegreeSequence tail;
    tail.degrees.assign(remaining_.begin() + from, remaining_.end());
    return erdos_gallai_realizable(tail);
  }

  int n_;
  std::vector<int> remaining_;
  const GraphSink& sink_;
  std::vector<VertexSet> rows_;
};

double ratio_to_bound(const VerificationRecord& r) {
  if (r.perfmat == 0) return 0.0;
  const double log_b = log_value(matching_bound(r.degrees)) / 2.0;
  return std::exp(std::log(r.perfmat.convert_to<double>()) - log_b);
}

}  // namespace

void exhaustive_labeled_graphs(int n, const GraphSink& sink, int max_order) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > max_order) {
    throw GuardError("exhaustive enumeration limited to n <= " +
                     std::to_string(max_order) + ", got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  const int m = static_cast<int>(pairs.size());
  std::vector<VertexSet> rows(n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    std::fill(rows.begin(), rows.end(), 0);
    for (int t = 0; t < m; ++t) {
      if ((k >> (m - 1 - t)) & 1U) {
        auto [u, v] = pairs[t];
        rows[u] |= VertexSet{1} << v;
        rows[v] |= VertexSet{1} << u;
      }
    }
    sink(Graph::from_rows(n, rows));
  }
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> rows(n, 0);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (draw_edge(rng, p)) {
        rows[u] |= VertexSet{1} << v;
        rows[v] |= VertexSet{1} << u;
      }
    }
  }
  return Graph::from_rows(n, rows);
}

Matrix01 random_matrix(int n, double p, std::uint64_t seed) {
  check_probability(p);
  Matrix01 m(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, draw_edge(rng, p));
  }
  return m;
}

bool erdos_gallai_realizable(const DegreeSequence& d) {
  std::vector<long> deg(d.degrees.begin(), d.degrees.end());
  if (std::ranges::any_of(deg, [](long x) { return x < 0; })) return false;
  if (std::accumulate(deg.begin(), deg.end(), 0L) % 2 != 0) return false;
  std::ranges::sort(deg, std::greater<>());
  const long n = static_cast<long>(deg.size());
  long prefix = 0;
  for (long k = 1; k <= n; ++k) {
    prefix += deg[k - 1];
    long tail = 0;
    for (long i = k; i < n; ++i) tail += std::min(deg[i], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

void realizations_of_degree_sequence(const DegreeSequence& d,
                                     const GraphSink& sink, int max_order) {
  const int n = static_cast<int>(d.size());
  if (n > max_order) {
    throw GuardError("realization search limited to n <= " +
                     std::to_string(max_order) + ", got " + std::to_string(n));
  }
  RealizationSearch(d, sink).run();
}

VerificationRecord verify_graph(const Graph& g, int oracle_limit) {
  VerificationRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.n();
  r.degrees = degree_sequence(g);
  r.perfmat = count_perfect_matchings(g);
  r.perm = permanent_adjacency(g);
  const Count squared = r.perfmat * r.perfmat;
  r.gibson = compare_counts(squared, r.perm);
  r.matching_cmp = compare_count_with_bound(r.perfmat, matching_bound(r.degrees), 2);
  r.bm_cmp = compare_count_with_bound(r.perm, bregman_minc_bound(r.degrees.degrees), 1);
  r.structure = is_union_of_complete_balanced_bipartite(g);
  if (g.n() <= oracle_limit) {
    r.oracle_even = weighted_cycle_cover_count(g, CycleMode::even_only, oracle_limit).total;
    r.oracle_all = weighted_cycle_cover_count(g, CycleMode::all_cycles, oracle_limit).total;
  }

  bool ok = r.gibson != Ordering::Greater &&
            r.matching_cmp != Ordering::Greater &&
            r.bm_cmp != Ordering::Greater;
  // Equality characterisation applies to even order without isolated vertices.
  if (g.n() % 2 == 0 && g.n() > 0 && g.min_degree() >= 1) {
    ok = ok && ((r.matching_cmp == Ordering::Equal) == r.structure);
  }
  if (r.oracle_even) ok = ok && *r.oracle_even == squared;
  if (r.oracle_all) ok = ok && *r.oracle_all == r.perm;
  r.pass = ok;
  return r;
}

std::vector<VerificationRecord> verify_graphs(std::span<const Graph> graphs,
                                              int oracle_limit, int jobs) {
  std::vector<VerificationRecord> out(graphs.size());
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, graphs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      out[i] = verify_graph(graphs[i], oracle_limit);
    }
  };
  if (jobs == 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
  pool.clear();
  return out;
}

void RunSummary::add(const VerificationRecord& r) {
  ++graphs_processed;
  if (!r.pass) {
    violations.insert(std::ranges::upper_bound(violations, r.graph6), r.graph6);
  }
  if (r.matching_cmp == Ordering::Equal) ++equality_cases;
  if (r.gibson == Ordering::Equal) ++gibson_equality_cases;
  max_ratio_seen = std::max(max_ratio_seen, ratio_to_bound(r));
}

void RunSummary::merge(const RunSummary& other) {
  graphs_processed += other.graphs_processed;
  std::vector<std::string> merged;
  merged.reserve(violations.size() + other.violations.size());
  std::ranges::merge(violations, other.violations, std::back_inserter(merged));
  violations = std::move(merged);
  equality_cases += other.equality_cases;
  gibson_equality_cases += other.gibson_equality_cases;
  max_ratio_seen = std::max(max_ratio_seen, other.max_ratio_seen);
}

RunSummary aggregate(std::span<const VerificationRecord> records) {
  RunSummary s;
  for (const auto& r : records) s.add(r);
  return s;
}

ExtremalReport extremal_search(const DegreeSequence& d, int max_order) {
  if (static_cast<int>(d.size()) > max_order) {
    throw GuardError("realization search limited to n <= " +
                     std::to_string(max_order) + ", got " +
                     std::to_string(d.size()));
  }
  if (!erdos_gallai_realizable(d)) {
    throw InputError("degree sequence is not graphic");
  }
  ExtremalReport report;
  report.degrees = d;
  report.equality_feasible = equality_feasible_degrees(d);
  std::optional<Graph> best;
  realizations_of_degree_sequence(
      d,
      [&](const Graph& g) {
        ++report.realizations;
        Count c = count_perfect_matchings(g);
        if (!best || c > report.max_perfmat) {
          report.max_perfmat = std::move(c);
          best = g;
        }
      },
      max_order);
  report.best_graph6 = to_graph6(*best);
  report.matching_cmp =
      compare_count_with_bound(report.max_perfmat, matching_bound(d), 2);
  report.equality_attained = report.matching_cmp == Ordering::Equal;
  report.witness_structure = is_union_of_complete_balanced_bipartite(*best);
  return report;
}

}  // namespace perfmat
