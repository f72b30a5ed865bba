#pragma once

#include "happy/bigint.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace happy {

// Exponent/base pair (e, b) for the digit power map.
struct Params {
  int exponent;
  int base;

  Params(int exponent, int base);

  friend bool operator==(const Params&, const Params&) = default;
};

// A nonnegative integer with its base-b expansion, most-significant digit
// first. Zero is the single digit 0; otherwise there is no leading zero.
struct Numeral {
  BigInt value;
  int base;
  std::vector<int> digits;

  friend bool operator==(const Numeral&, const Numeral&) = default;
};

Numeral to_digits(const BigInt& value, int base);

// Exact Horner evaluation; rejects digits outside [0, base).
BigInt from_digits(const std::vector<int>& digits, int base);

// Sum of the e-th powers of the base-b digits of n. Requires n >= 1.
BigInt happy_step(const BigInt& n, const Params& p);

enum class Classification { Happy, Unhappy };

// A periodic orbit of the map, rotated so the smallest member comes first;
// consecutive members satisfy members[j] = step(members[j-1]).
struct Cycle {
  std::vector<BigInt> members;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool operator<(const Cycle& lhs, const Cycle& rhs);

struct OrbitReport {
  Params params;
  BigInt start;
  // x_0 = start, x_{i+1} = step(x_i). Happy orbits stop at the first 1,
  // unhappy orbits at the first value seen twice (the revisit is kept so
  // the cycle shows up in the raw list).
  std::vector<BigInt> iterates;
  Classification classification;
  std::optional<Cycle> cycle;  // engaged iff unhappy
  // Happy: least l with step^l(start) = 1. Unhappy: least l landing inside
  // the cycle. Cycle members and 1 itself have height 0.
  std::size_t height;

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

OrbitReport orbit(const BigInt& n, const Params& p);

std::size_t height(const BigInt& n, const Params& p);

// Least digit count d0 such that every n with d0 or more digits shrinks
// strictly under the map.
int contraction_digit_threshold(const Params& p);

// b^(d0-1). The map sends [1, bound] into itself and strictly decreases
// everything above, so all periodic behaviour lives at or below the bound.
BigInt census_bound(const Params& p);

// Every cycle of the map on the positive integers, the fixed point {1}
// included, sorted by smallest member. Requires e >= 2; throws
// BudgetExceeded when the census bound is larger than budget.
std::vector<Cycle> find_all_cycles(const Params& p,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace happy
