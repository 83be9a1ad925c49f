#include "perfmat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <mpfr.h>

#include "perfmat/errors.hpp"

namespace perfmat {

namespace {

std::vector<int> primes_up_to(int limit) {
  std::vector<int> out;
  std::vector<bool> composite(std::max(limit + 1, 2), false);
  for (int p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (int q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return out;
}

FactorialProductBound factorial_root_product(BoundKind kind,
                                             std::span<const int> entries) {
  FactorialProductBound b;
  b.kind = kind;
  std::map<int, long> multiplicity;
  for (int d : entries) {
    if (d < 0) throw InputError("negative degree or row sum");
    if (d == 0) b.zero = true;
    ++multiplicity[d];
  }
  if (b.zero) return b;
  for (auto [d, count] : multiplicity) {
    for (int p : primes_up_to(d)) {
      b.exponents[p] += Rational(count * legendre_valuation(d, p), d);
    }
  }
  return b;
}

void check_side_power(int side_power) {
  if (side_power != 1 && side_power != 2) {
    throw std::invalid_argument("side_power must be 1 or 2, got " +
                                std::to_string(side_power));
  }
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

// Encloses side_power * ln(c) - sum_p e_p ln(p) at the given precision.
// Returns Less/Greater when the enclosure excludes zero, Equal otherwise
// (meaning "undecided at this precision").
Ordering log_interval_verdict(const Count& c, const FactorialProductBound& b,
                              int side_power, mpfr_prec_t prec) {
  Mpfr lhs_lo(prec), lhs_hi(prec), rhs_lo(prec), rhs_hi(prec);
  Mpfr term_lo(prec), term_hi(prec), d_lo(prec), d_hi(prec);

  mpfr_set_z(lhs_lo.get(), c.backend().data(), MPFR_RNDD);
  mpfr_log(lhs_lo.get(), lhs_lo.get(), MPFR_RNDD);
  mpfr_mul_ui(lhs_lo.get(), lhs_lo.get(), side_power, MPFR_RNDD);
  mpfr_set_z(lhs_hi.get(), c.backend().data(), MPFR_RNDU);
  mpfr_log(lhs_hi.get(), lhs_hi.get(), MPFR_RNDU);
  mpfr_mul_ui(lhs_hi.get(), lhs_hi.get(), side_power, MPFR_RNDU);

  mpfr_set_zero(rhs_lo.get(), 1);
  mpfr_set_zero(rhs_hi.get(), 1);
  for (const auto& [p, e] : b.exponents) {
    const auto num = boost::multiprecision::numerator(e);
    const auto den = boost::multiprecision::denominator(e);
    // ln p > 0 and e > 0, so rounding every step the same way bounds the term.
    mpfr_set_ui(term_lo.get(), p, MPFR_RNDD);
    mpfr_log(term_lo.get(), term_lo.get(), MPFR_RNDD);
    mpfr_mul_z(term_lo.get(), term_lo.get(), num.backend().data(), MPFR_RNDD);
    mpfr_div_z(term_lo.get(), term_lo.get(), den.backend().data(), MPFR_RNDD);
    mpfr_add(rhs_lo.get(), rhs_lo.get(), term_lo.get(), MPFR_RNDD);

    mpfr_set_ui(term_hi.get(), p, MPFR_RNDU);
    mpfr_log(term_hi.get(), term_hi.get(), MPFR_RNDU);
    mpfr_mul_z(term_hi.get(), term_hi.get(), num.backend().data(), MPFR_RNDU);
    mpfr_div_z(term_hi.get(), term_hi.get(), den.backend().data(), MPFR_RNDU);
    mpfr_add(rhs_hi.get(), rhs_hi.get(), term_hi.get(), MPFR_RNDU);
  }
  mpfr_sub(d_lo.get(), lhs_lo.get(), rhs_hi.get(), MPFR_RNDD);
  mpfr_sub(d_hi.get(), lhs_hi.get(), rhs_lo.get(), MPFR_RNDU);
  if (mpfr_sgn(d_lo.get()) > 0) return Ordering::Greater;
  if (mpfr_sgn(d_hi.get()) < 0) return Ordering::Less;
  return Ordering::Equal;
}

}  // namespace

bool FactorialProductBound::integral() const {
  if (zero) return true;
  return std::ranges::all_of(exponents, [](const auto& kv) {
    return boost::multiprecision::denominator(kv.second) == 1;
  });
}

Count FactorialProductBound::materialize() const {
  if (zero) return 0;
  if (!integral()) throw std::logic_error("bound value is not an integer");
  Count out = 1;
  for (const auto& [p, e] : exponents) {
    const auto exp = boost::multiprecision::numerator(e);
    out *= boost::multiprecision::pow(Count(p), exp.convert_to<unsigned>());
  }
  return out;
}

long legendre_valuation(int k, int p) {
  long v = 0;
  for (long q = p; q <= k; q *= p) v += k / q;
  return v;
}

FactorialProductBound matching_bound(const DegreeSequence& d) {
  return factorial_root_product(BoundKind::matching_bound, d.degrees);
}

FactorialProductBound bregman_minc_bound(std::span<const int> row_sums) {
  return factorial_root_product(BoundKind::bm_bound, row_sums);
}

double log_value(const FactorialProductBound& b) {
  if (b.zero) return -std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (const auto& [p, e] : b.exponents) {
    total += e.convert_to<double>() * std::log(static_cast<double>(p));
  }
  return total;
}

Ordering compare_counts(const Count& a, const Count& b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

Ordering compare_count_with_bound(const Count& c, const FactorialProductBound& b,
                                  int side_power) {
  check_side_power(side_power);
  const Count lhs = side_power == 2 ? Count(c * c) : c;
  if (b.zero) return compare_counts(lhs, 0);
  if (b.integral()) return compare_counts(lhs, b.materialize());
  // A non-integral exponent makes the value irrational, so it differs from
  // every integer and the interval eventually separates.
  if (c == 0) return Ordering::Less;
  for (mpfr_prec_t prec = 64; prec <= 4096; prec *= 2) {
    const Ordering verdict = log_interval_verdict(c, b, side_power, prec);
    if (verdict != Ordering::Equal) return verdict;
  }
  throw std::runtime_error(
      "certified comparison undecided at 4096 bits of precision");
}

Ordering lcm_power_compare(const Count& c, const FactorialProductBound& b,
                           int side_power) {
  check_side_power(side_power);
  if (b.zero) return compare_counts(c, 0);
  Count lcm = 1;
  for (const auto& [p, e] : b.exponents) {
    lcm = boost::multiprecision::lcm(lcm, Count(boost::multiprecision::denominator(e)));
  }
  const double l = lcm.convert_to<double>();
  const double lhs_bits =
      c == 0 ? 0.0
             : side_power * l * std::log2(c.convert_to<double>());
  double rhs_bits = 0.0;
  for (const auto& [p, e] : b.exponents) {
    rhs_bits += e.convert_to<double>() * l * std::log2(static_cast<double>(p));
  }
  if (lhs_bits > kLcmOracleMaxBits || rhs_bits > kLcmOracleMaxBits) {
    throw GuardError("lcm-power comparison would exceed " +
                     std::to_string(kLcmOracleMaxBits) + " bits");
  }
  const auto power = lcm.convert_to<unsigned>();
  const Count lhs = boost::multiprecision::pow(c, side_power * power);
  Count rhs = 1;
  for (const auto& [p, e] : b.exponents) {
    const Count scaled = boost::multiprecision::numerator(e) * lcm /
                         boost::multiprecision::denominator(e);
    rhs *= boost::multiprecision::pow(Count(p), scaled.convert_to<unsigned>());
  }
  return compare_counts(lhs, rhs);
}

bool equality_feasible_degrees(const DegreeSequence& d) {
  std::map<int, long> multiplicity;
  for (int k : d.degrees) {
    if (k < 1) return false;
    ++multiplicity[k];
  }
  return std::ranges::all_of(multiplicity, [](const auto& kv) {
    return kv.second % (2L * kv.first) == 0;
  });
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

std::string to_string(BoundKind k) {
  return k == BoundKind::matching_bound ? "matching_bound" : "bm_bound";
}

}  // namespace perfmat
