#pragma once

#include <map>
#include <span>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "perfmat/counting.hpp"
#include "perfmat/graph.hpp"

namespace perfmat {

using Rational = boost::multiprecision::mpq_rational;

enum class BoundKind { matching_bound, bm_bound };

enum class Ordering { Less, Equal, Greater };

/// A product of factorial roots held exactly as prod_p p^{e_p} with rational
/// exponents. For matching_bound the represented value is the square of the
/// perfect-matching bound, prod_i (d_i!)^{1/d_i}; for bm_bound it is
/// prod_i (r_i!)^{1/r_i}. A zero entry (0^{1/0} = 0) sets `zero` and the
/// value is then exactly 0 regardless of `exponents`.
struct FactorialProductBound {
  BoundKind kind = BoundKind::matching_bound;
  bool zero = false;
  std::map<int, Rational> exponents;  // prime -> e_p, only nonzero e_p

  /// True when every e_p is an integer, i.e. the value is an integer.
  bool integral() const;
  /// Exact value; requires integral() or zero.
  Count materialize() const;
};

/// v_p(k!) by Legendre's formula.
long legendre_valuation(int k, int p);

FactorialProductBound matching_bound(const DegreeSequence& d);
FactorialProductBound bregman_minc_bound(std::span<const int> row_sums);

/// Natural log of the represented value; -infinity when zero. Reporting only.
double log_value(const FactorialProductBound& b);

/// Certified comparison of c^side_power against the represented value.
/// side_power must be 1 or 2. Exact when the value is an integer; otherwise
/// decided from MPFR intervals of escalating precision (64 up to 4096 bits).
Ordering compare_count_with_bound(const Count& c, const FactorialProductBound& b,
                                  int side_power);

inline constexpr long kLcmOracleMaxBits = 1'000'000;

/// Independent check: raises both sides to the lcm L of the exponent
/// denominators and compares c^{side_power*L} with prod p^{e_p*L} exactly.
/// Throws GuardError when either side would exceed kLcmOracleMaxBits bits.
Ordering lcm_power_compare(const Count& c, const FactorialProductBound& b,
                           int side_power);

/// Necessary condition for equality in the matching bound: every degree is
/// at least 1 and each value k occurs a multiple of 2k times.
bool equality_feasible_degrees(const DegreeSequence& d);

Ordering compare_counts(const Count& a, const Count& b);

std::string to_string(Ordering o);
std::string to_string(BoundKind k);

}  // namespace perfmat
