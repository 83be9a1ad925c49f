#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "perfmat/graph.hpp"

namespace perfmat {

using Count = boost::multiprecision::mpz_int;

/// Square 0/1 matrix of order at most 62, one bit row per matrix row.
/// Bit j of row i is entry (i, j).
class Matrix01 {
 public:
  Matrix01() = default;
  explicit Matrix01(int n);
  static Matrix01 from_rows(int n, std::span<const std::uint64_t> rows);
  static Matrix01 identity(int n);
  static Matrix01 all_ones(int n);
  static Matrix01 adjacency(const Graph& g);

  int n() const { return n_; }
  std::uint64_t row(int i) const { return rows_[i]; }
  bool at(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool value);
  void flip(int i, int j) { set(i, j, !at(i, j)); }

  std::vector<int> row_sums() const;
  /// Rows having a one in column j, as a bitset over row indices.
  std::uint64_t column_support(int j) const;

  /// Entry (row_perm[i], col_perm[j]) of the result is entry (i, j) here.
  Matrix01 permuted(std::span<const int> row_perm,
                    std::span<const int> col_perm) const;
  /// Block-diagonal sum with `other` placed after this matrix.
  Matrix01 direct_sum(const Matrix01& other) const;

  bool operator==(const Matrix01& other) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Number of perfect matchings. 0 for odd n, 1 for n = 0.
Count count_perfect_matchings(const Graph& g);

/// Exact permanent via Ryser's formula over Gray-code ordered column
/// subsets. Order 0 gives 1.
Count permanent(const Matrix01& m);
Count permanent_adjacency(const Graph& g);

inline constexpr int kNaivePermanentLimit = 10;

/// Direct sum over all n! permutations. Throws GuardError above
/// `max_order`.
Count naive_permanent(const Matrix01& m, int max_order = kNaivePermanentLimit);

enum class CycleMode { even_only, all_cycles };

/// Sum over spanning 2-regular subgraphs H of 2^s, s = number of cycles of H
/// on more than two vertices. A 2-vertex "cycle" is one edge taken twice.
struct CycleCoverTally {
  CycleMode mode = CycleMode::all_cycles;
  Count total;
};

inline constexpr int kCycleCoverLimit = 14;
// Table size 2^n * n; the tallies also stay below 2^128 up to here.
inline constexpr int kCycleCoverHardLimit = 20;

CycleCoverTally weighted_cycle_cover_count(const Graph& g, CycleMode mode,
                                           int max_order = kCycleCoverLimit);

/// True iff rows and columns can be permuted so that m becomes a direct sum
/// of square all-ones blocks. Any zero row makes this false.
bool is_block_all_ones_up_to_permutation(const Matrix01& m);

std::string to_string(CycleMode mode);

namespace detail {
// Ryser in big integers regardless of size; exposed for tests.
Count permanent_ryser_bigint(const Matrix01& m);
}  // namespace detail

}  // namespace perfmat
