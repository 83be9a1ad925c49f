#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfmat/bounds.hpp"
#include "perfmat/counting.hpp"
#include "perfmat/graph.hpp"

namespace perfmat {

using GraphSink = std::function<void(const Graph&)>;

inline constexpr int kExhaustiveLimit = 7;
inline constexpr int kRealizationLimit = 10;
inline constexpr int kDefaultOracleLimit = 10;
inline constexpr const char* kRandomGeneratorName = "mt19937_64";

/// Every labeled simple graph on n vertices, in increasing order of the
/// graph6 payload read as a binary number (first pair most significant).
void exhaustive_labeled_graphs(int n, const GraphSink& sink,
                               int max_order = kExhaustiveLimit);

/// G(n, p) with std::mt19937_64 seeded by `seed`; pairs are drawn in graph6
/// order and pair t is an edge iff (x_t >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// n x n matrix, each entry 1 with probability p, row-major draws from the
/// same generator as random_graph.
Matrix01 random_matrix(int n, double p, std::uint64_t seed);

bool erdos_gallai_realizable(const DegreeSequence& d);

/// Every labeled graph whose vertex i has degree d[i], each exactly once, in
/// a fixed backtracking order.
void realizations_of_degree_sequence(const DegreeSequence& d,
                                     const GraphSink& sink,
                                     int max_order = kRealizationLimit);

struct VerificationRecord {
  std::string graph6;
  int n = 0;
  DegreeSequence degrees;
  Count perfmat;
  Count perm;
  Ordering gibson = Ordering::Equal;        // perfmat^2 vs perm
  Ordering matching_cmp = Ordering::Equal;  // perfmat vs degree bound
  Ordering bm_cmp = Ordering::Equal;        // perm vs Bregman-Minc bound
  bool structure = false;
  std::optional<Count> oracle_even;
  std::optional<Count> oracle_all;
  bool pass = false;
};

VerificationRecord verify_graph(const Graph& g,
                                int oracle_limit = kDefaultOracleLimit);

/// Verifies `graphs` on `jobs` worker threads; records keep input order.
std::vector<VerificationRecord> verify_graphs(std::span<const Graph> graphs,
                                              int oracle_limit, int jobs);

struct RunSummary {
  long graphs_processed = 0;
  std::vector<std::string> violations;  // sorted graph6 strings
  long equality_cases = 0;              // matching bound attained
  long gibson_equality_cases = 0;       // perfmat^2 == perm
  double max_ratio_seen = 0.0;          // max perfmat / bound

  void add(const VerificationRecord& r);
  void merge(const RunSummary& other);
  bool operator==(const RunSummary&) const = default;
};

RunSummary aggregate(std::span<const VerificationRecord> records);

struct ExtremalReport {
  DegreeSequence degrees;
  long realizations = 0;
  std::string best_graph6;
  Count max_perfmat;
  Ordering matching_cmp = Ordering::Less;
  bool witness_structure = false;
  bool equality_feasible = false;
  bool equality_attained = false;
};

/// Maximises the perfect-matching count over all realizations of d. Throws
/// InputError when d is not graphic.
ExtremalReport extremal_search(const DegreeSequence& d,
                               int max_order = kRealizationLimit);

}  // namespace perfmat
